#include "nilcollect/collector.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nilcollect {

int ExponentVector::min_weight() const {
  if (exps_.empty()) return 0;
  const Basis& basis = ctx_->basis();
  int w = basis.weight_of(exps_.begin()->first);
  for (const auto& [id, e] : exps_) w = std::min(w, basis.weight_of(id));
  return w;
}

GroupContext::GroupContext(Basis basis) : basis_(std::move(basis)) {}

ExponentVector GroupContext::element(int id, Int exp) const {
  if (id < 1 || id > basis_.size()) throw std::invalid_argument("element: id out of range");
  ExponentVector r(this);
  r.add(id, exp);
  return r;
}

ExponentVector GroupContext::generator(std::string_view name) const {
  int id = basis_.generator_id(name);
  if (id == 0) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  return element(id);
}

void GroupContext::check_context(const ExponentVector& u) const {
  if (!u.is_identity() && u.context() != this)
    throw std::invalid_argument("exponent vector belongs to a different context");
}

ExponentVector GroupContext::multiply(ExponentVector u, const ExponentVector& v) const {
  check_context(u);
  check_context(v);
  for (const auto& [k, n] : v.exponents()) u = multiply_factor(std::move(u), k, n);
  return u;
}

ExponentVector GroupContext::multiply_factor(ExponentVector u, int k, const Int& n) const {
  if (n == 0) return u;
  if (u.is_identity()) return element(k, n);
  check_context(u);

  auto& exps = u.exponents();
  auto split = exps.upper_bound(k);
  int kw = basis_.weight_of(k);
  bool interacts = false;
  for (auto it = split; it != exps.end(); ++it) {
    if (basis_.weight_of(it->first) + kw <= class_bound()) {
      interacts = true;
      break;
    }
  }
  if (!interacts) {
    // c_k commutes with everything to its right.
    u.add(k, n);
    return u;
  }

  // u = A * B with ids(A) <= k < ids(B); then u c_k^n = A c_k^n B^{c_k^n}.
  ExponentVector tail(this);
  for (auto it = split; it != exps.end(); ++it)
    tail = multiply(std::move(tail), power(conj_elem(it->first, k, n), it->second));
  exps.erase(split, exps.end());
  u.add(k, n);
  for (const auto& [id, e] : tail.exponents()) u.add(id, e);
  return u;
}

ExponentVector GroupContext::inverse(const ExponentVector& u) const {
  check_context(u);
  ExponentVector r(this);
  const auto& exps = u.exponents();
  for (auto it = exps.rbegin(); it != exps.rend(); ++it)
    r = multiply_factor(std::move(r), it->first, -it->second);
  return r;
}

ExponentVector GroupContext::power(const ExponentVector& u, const Int& n) const {
  check_context(u);
  if (n == 0 || u.is_identity()) return identity();
  if (n < 0) return power(inverse(u), -n);
  if (u.exponents().size() == 1) {
    // Powers of a single basis element stay a single factor.
    const auto& [id, e] = *u.exponents().begin();
    return element(id, e * n);
  }
  ExponentVector result = identity();
  ExponentVector base = u;
  Int m = n;
  while (true) {
    if (mpz_odd_p(m.get_mpz_t())) result = multiply(std::move(result), base);
    m >>= 1;
    if (m == 0) break;
    base = multiply(base, base);
  }
  return result;
}

ExponentVector GroupContext::commutator(const ExponentVector& u, const ExponentVector& v) const {
  check_context(u);
  check_context(v);
  if (u.is_identity() || v.is_identity()) return identity();
  if (u.min_weight() + v.min_weight() > class_bound()) return identity();
  return multiply(multiply(inverse(u), inverse(v)), multiply(u, v));
}

ExponentVector GroupContext::normal_form(const Word& w) const {
  ExponentVector r = identity();
  for (const auto& [id, e] : w) r = multiply_factor(std::move(r), id, e);
  return r;
}

ExponentVector GroupContext::conj_elem(int j, int k, const Int& n) const {
  // [c_j, c_k^n] has only ids heavier than j; prepending c_j keeps order.
  ExponentVector t = letter_comm_power(j, k, n);
  ExponentVector out(this);
  out.add(j, 1);
  for (const auto& [id, e] : t.exponents()) out.add(id, e);
  return out;
}

ExponentVector GroupContext::conj_by(const ExponentVector& x, int k, const Int& n) const {
  ExponentVector r(this);
  for (const auto& [j, e] : x.exponents())
    r = multiply(std::move(r), power(conj_elem(j, k, n), e));
  return r;
}

ExponentVector GroupContext::letter_comm_power(int j, int k, const Int& n) const {
  if (j <= k) throw std::invalid_argument("letter_comm_power: requires j > k");
  if (n == 0) return identity();
  if (basis_.weight_of(j) + basis_.weight_of(k) > class_bound()) return identity();
  if (n == 1) return comm_letter(j, k);

  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = comm_power_memo_.find({j, k, n});
    if (it != comm_power_memo_.end()) return it->second;
  }

  ExponentVector r(this);
  if (n < 0) {
    // [x, y^-1] = ([x, y^m])^{-1} conjugated by y^{-m}, m = -n.
    r = conj_by(inverse(letter_comm_power(j, k, -n)), k, n);
  } else if (mpz_even_p(n.get_mpz_t())) {
    // [x, y^{2m}] = [x, y^m] * [x, y^m]^{y^m}.
    Int m = n >> 1;
    ExponentVector g = letter_comm_power(j, k, m);
    r = multiply(g, conj_by(g, k, m));
  } else {
    // [x, y^{m+1}] = [x, y] * [x, y^m]^{y}.
    r = multiply(comm_letter(j, k), conj_by(letter_comm_power(j, k, n - 1), k, 1));
  }

  std::lock_guard<std::mutex> lock(memo_mutex_);
  comm_power_memo_.emplace(std::make_tuple(j, k, n), r);
  return r;
}

ExponentVector GroupContext::comm_letter(int j, int i) const {
  if (j <= i) throw std::invalid_argument("comm_letter: requires j > i");
  if (basis_.weight_of(j) + basis_.weight_of(i) > class_bound()) return identity();

  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = comm_memo_.find({j, i});
    if (it != comm_memo_.end()) return it->second;
  }

  ExponentVector r(this);
  if (basis_.hall_condition(j, i)) {
    int id = basis_.bracket_id(j, i);
    if (id == 0) throw std::logic_error("comm_letter: missing Hall bracket");
    r.add(id, 1);
  } else {
    // j = [u,v] with v > i. Conjugation is a homomorphism:
    // [c_j, c_i] = c_j^{-1} [c_u^{c_i}, c_v^{c_i}].
    static thread_local std::set<std::pair<int, int>> in_progress;
    if (!in_progress.insert({j, i}).second)
      throw std::logic_error("comm_letter: unexpected recursion cycle");
    const BasicCommutator& e = basis_.at(j);
    ExponentVector a = conj_elem(e.left, i, 1);
    ExponentVector b = conj_elem(e.right, i, 1);
    r = multiply(element(j, -1), commutator(a, b));
    in_progress.erase({j, i});
  }

  std::lock_guard<std::mutex> lock(memo_mutex_);
  comm_memo_.emplace(std::make_pair(j, i), r);
  return r;
}

ExponentVector substitute(const std::vector<ExponentVector>& gen_images,
                          const Basis& source_basis, const ExponentVector& target,
                          const GroupContext& out) {
  if (static_cast<int>(gen_images.size()) != source_basis.rank())
    throw std::invalid_argument("substitute: one image required per source generator");
  std::vector<ExponentVector> images(source_basis.size());
  std::vector<bool> ready(source_basis.size(), false);
  auto image = [&](auto&& self, int id) -> const ExponentVector& {
    if (!ready[id - 1]) {
      const BasicCommutator& e = source_basis.at(id);
      images[id - 1] = e.is_generator()
                           ? gen_images[e.gen - 1]
                           : out.commutator(self(self, e.left), self(self, e.right));
      ready[id - 1] = true;
    }
    return images[id - 1];
  };
  ExponentVector r = out.identity();
  for (const auto& [id, e] : target.exponents())
    r = out.multiply(std::move(r), out.power(image(image, id), e));
  return r;
}

ExponentVector project(const ExponentVector& u, const GroupContext& out) {
  ExponentVector r = out.identity();
  for (const auto& [id, e] : u.exponents()) {
    if (id > out.basis().size()) continue;
    r.add(id, e);
  }
  return r;
}

}  // namespace nilcollect
