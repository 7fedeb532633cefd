#include "nilcollect/magnus.hpp"

namespace nilcollect {

Series Series::operator*(const Series& o) const {
  Series r(ring_);
  for (const auto& [ma, ca] : terms_) {
    int da = ring_->degree(ma);
    for (const auto& [mb, cb] : o.terms_) {
      if (da + ring_->degree(mb) > ring_->cap()) continue;
      std::vector<int> m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      Int& c = r.terms_[m];
      c += ca * cb;
      if (c == 0) r.terms_.erase(m);
    }
  }
  return r;
}

Series Series::inverse() const {
  if (coefficient({}) != 1)
    throw std::invalid_argument("series inverse: constant term must be 1");
  // s = 1 + t with t of degree >= 1; s^-1 = sum (-t)^k, k <= cap.
  Series t(ring_);
  for (const auto& [m, c] : terms_)
    if (!m.empty()) t.terms_[m] = -c;
  Series acc = one(*ring_);
  Series power = one(*ring_);
  for (int k = 1; k <= ring_->cap(); ++k) {
    power = power * t;
    if (power.terms_.empty()) break;
    for (const auto& [m, c] : power.terms_) {
      Int& x = acc.terms_[m];
      x += c;
      if (x == 0) acc.terms_.erase(m);
    }
  }
  return acc;
}

Series Series::pow(const Int& n) const {
  if (n < 0) return inverse().pow(-n);
  Series r = one(*ring_);
  Series base = *this;
  Int m = n;
  while (m != 0) {
    if (mpz_odd_p(m.get_mpz_t())) r = r * base;
    m >>= 1;
    if (m != 0) base = base * base;
  }
  return r;
}

Series magnus_basis_image(const MagnusRing& r, const Basis& b, int id) {
  const BasicCommutator& e = b.at(id);
  if (e.is_generator()) return Series::unit_plus_var(r, e.gen - 1);
  Series u = magnus_basis_image(r, b, e.left);
  Series v = magnus_basis_image(r, b, e.right);
  return u.inverse() * v.inverse() * u * v;
}

Series magnus_image(const MagnusRing& r, const Basis& b, const Word& w) {
  Series s = Series::one(r);
  for (const auto& [id, e] : w) s = s * magnus_basis_image(r, b, id).pow(e);
  return s;
}

Series magnus_expr_image(const MagnusRing& r, const Basis& b, const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Gen: {
      int id = b.generator_id(e->name);
      if (id == 0) throw std::invalid_argument("unknown generator '" + e->name + "'");
      return Series::unit_plus_var(r, b.at(id).gen - 1);
    }
    case Expr::Kind::Product: {
      Series s = Series::one(r);
      for (const auto& a : e->args) s = s * magnus_expr_image(r, b, a);
      return s;
    }
    case Expr::Kind::Power:
      return magnus_expr_image(r, b, e->base).pow(e->exp);
    case Expr::Kind::Bracket: {
      Series s = magnus_expr_image(r, b, e->args[0]);
      for (size_t i = 1; i < e->args.size(); ++i) {
        Series v = magnus_expr_image(r, b, e->args[i]);
        s = s.inverse() * v.inverse() * s * v;
      }
      return s;
    }
  }
  return Series::one(r);
}

bool check_normal_form(const MagnusRing& r, const Basis& b, const Word& w,
                       const ExponentVector& nf) {
  Series lhs = magnus_image(r, b, w);
  Series rhs = Series::one(r);
  for (const auto& [id, e] : nf.exponents()) rhs = rhs * magnus_basis_image(r, b, id).pow(e);
  return lhs == rhs;
}

}  // namespace nilcollect
