#include "nilcollect/power_polys.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nilcollect {

bool IntegerValuedPolynomial::operator==(const IntegerValuedPolynomial& o) const {
  size_t n = std::max(coeffs.size(), o.coeffs.size());
  for (size_t j = 0; j < n; ++j) {
    Int a = j < coeffs.size() ? coeffs[j] : Int(0);
    Int b = j < o.coeffs.size() ? o.coeffs[j] : Int(0);
    if (a != b) return false;
  }
  return true;
}

IntegerValuedPolynomial ivp_from_values(std::vector<Int> values) {
  // Repeated forward differencing; row j's leading entry is the C(t,j) coeff.
  IntegerValuedPolynomial p;
  p.coeffs.reserve(values.size());
  for (size_t j = 0; j < values.size(); ++j) {
    p.coeffs.push_back(values.front());
    for (size_t i = 0; i + j + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
  }
  while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
  return p;
}

ExponentVector HallExpansion::assemble(const Int& n) const {
  ExponentVector r(ctx_.get());
  for (int id = 1; id <= ctx_->basis().size(); ++id) r.add(id, polys_[id - 1].eval(n));
  return r;
}

ExponentVector HallExpansion::tail(const Int& n) const {
  ExponentVector r(ctx_.get());
  for (int id = 3; id <= ctx_->basis().size(); ++id) r.add(id, polys_[id - 1].eval(n));
  return r;
}

std::filesystem::path hallpoly_cache_dir() {
  if (const char* env = std::getenv("NILCOLLECT_CACHE")) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
    return std::filesystem::path(xdg) / "nilcollect";
  if (const char* home = std::getenv("HOME"))
    return std::filesystem::path(home) / ".cache" / "nilcollect";
  return std::filesystem::path(".nilcollect-cache");
}

namespace {

constexpr int kOrderingVersion = 1;

std::filesystem::path cache_file(int class_bound) {
  std::ostringstream name;
  name << "hallpoly-r2-c" << class_bound << "-v" << kOrderingVersion << ".txt";
  return hallpoly_cache_dir() / name.str();
}

bool load_cached(int class_bound, int count, std::vector<IntegerValuedPolynomial>& out) {
  std::ifstream in(cache_file(class_bound));
  if (!in) return false;
  std::string tag;
  int ver = 0, rank = 0, cls = 0, ord = 0, cnt = 0;
  std::string k1, k2, k3, k4;
  in >> tag >> ver >> k1 >> rank >> k2 >> cls >> k3 >> ord >> k4 >> cnt;
  if (!in || tag != "hallpoly" || ver != 1 || k1 != "rank" || rank != 2 || k2 != "class" ||
      cls != class_bound || k3 != "ordering" || ord != kOrderingVersion || k4 != "count" ||
      cnt != count)
    return false;
  in >> std::ws;
  out.assign(count, {});
  std::string line;
  for (int id = 1; id <= count; ++id) {
    if (!std::getline(in, line)) return false;
    std::istringstream row(line);
    std::string word;
    while (row >> word) out[id - 1].coeffs.emplace_back(word);
    while (!out[id - 1].coeffs.empty() && out[id - 1].coeffs.back() == 0)
      out[id - 1].coeffs.pop_back();
  }
  return true;
}

void store_cached(int class_bound, const std::vector<IntegerValuedPolynomial>& polys) {
  std::error_code ec;
  std::filesystem::create_directories(hallpoly_cache_dir(), ec);
  if (ec) return;  // cache is best-effort
  std::filesystem::path final = cache_file(class_bound);
  std::filesystem::path tmp = final;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << "hallpoly 1\nrank 2\nclass " << class_bound << "\nordering " << kOrderingVersion
        << "\ncount " << polys.size() << "\n";
    for (const auto& p : polys) {
      if (p.coeffs.empty()) out << "0";
      for (size_t j = 0; j < p.coeffs.size(); ++j) {
        if (j) out << ' ';
        out << to_string(p.coeffs[j]);
      }
      out << "\n";
    }
  }
  std::filesystem::rename(tmp, final, ec);
}

}  // namespace

HallExpansion hall_expansion(int class_bound, bool use_cache) {
  if (class_bound < 2) throw std::invalid_argument("hall_expansion: class_bound must be >= 2");
  auto ctx = std::make_shared<GroupContext>(Basis({{"a", 1}, {"b", 1}}, class_bound));
  int count = ctx->basis().size();

  std::vector<IntegerValuedPolynomial> polys;
  if (use_cache && load_cached(class_bound, count, polys))
    return HallExpansion(std::move(ctx), std::move(polys));

  ExponentVector ab = ctx->multiply(ctx->generator("a"), ctx->generator("b"));
  std::vector<std::vector<Int>> values(count, std::vector<Int>(class_bound + 1, 0));
  ExponentVector u = ctx->identity();
  for (int n = 1; n <= class_bound; ++n) {
    u = ctx->multiply(std::move(u), ab);
    for (const auto& [id, e] : u.exponents()) values[id - 1][n] = e;
  }
  polys.reserve(count);
  for (int id = 1; id <= count; ++id) polys.push_back(ivp_from_values(std::move(values[id - 1])));

  if (use_cache) store_cached(class_bound, polys);
  return HallExpansion(std::move(ctx), std::move(polys));
}

ExponentVector tail_of_power(const HallExpansion& he, const Int& n) { return he.tail(n); }

ExponentVector power_commutator(const HallExpansion& he, const Int& n, const GroupContext& out,
                                const ExponentVector& y, const ExponentVector& x,
                                const Int& exp_mod) {
  const Basis& src = he.context().basis();
  ExponentVector target(&he.context());
  auto reduce = [&](const Int& e) { return exp_mod > 0 ? mod_floor(e, exp_mod) : e; };
  target.add(2, reduce(n));
  for (int id = 3; id <= src.size(); ++id) target.add(id, reduce(he.poly(id).eval(n)));
  std::vector<ExponentVector> images = {y, out.commutator(y, x)};
  return substitute(images, src, target, out);
}

bool verify_weighted_expansion_gamma3(int r, int s) {
  static const GroupContext ctx(Basis({{"c", 1}, {"d", 1}}, 4));
  ExponentVector c = ctx.generator("c"), d = ctx.generator("d");
  ExponentVector lhs = ctx.commutator(ctx.power(c, r), ctx.power(d, s));

  ExponentVector cd = ctx.commutator(c, d);
  ExponentVector cdd = ctx.commutator(cd, d);
  ExponentVector cddd = ctx.commutator(cdd, d);
  ExponentVector cdc = ctx.commutator(cd, c);
  ExponentVector cddc = ctx.commutator(cdd, c);
  ExponentVector cdcc = ctx.commutator(cdc, c);

  ExponentVector rhs = ctx.identity();
  auto mul = [&](const ExponentVector& g, const Int& e) { rhs = ctx.multiply(rhs, ctx.power(g, e)); };
  mul(cd, Int(r) * s);
  mul(cdd, Int(r) * binomial(s, 2));
  mul(cddd, Int(r) * binomial(s, 3));
  mul(cdc, binomial(r, 2) * s);
  mul(cddc, binomial(r, 2) * binomial(s, 2));
  mul(cdcc, binomial(r, 3) * s);
  return lhs == rhs;
}

namespace {

// Graded weight of a basis element when c counts 2 and d counts 3.
int graded_weight_cd(const Basis& b, int id) {
  const BasicCommutator& e = b.at(id);
  if (e.is_generator()) return e.gen == 1 ? 2 : 3;
  return graded_weight_cd(b, e.left) + graded_weight_cd(b, e.right);
}

}  // namespace

bool verify_drcs_table(int r, int s) {
  static const GroupContext ctx(Basis({{"c", 1}, {"d", 1}}, 6));
  const Basis& b = ctx.basis();
  int C = 1, D = 2;
  auto br = [&](int u, int v) {
    int id = b.bracket_id(u, v);
    if (id == 0) throw std::logic_error("verify_drcs_table: missing basis element");
    return id;
  };
  // The tabulated basic commutators in c,d of graded weight <= 14.
  int dc = br(D, C);
  int dcc = br(dc, C), dcd = br(dc, D);
  int dccc = br(dcc, C), dccd = br(dcc, D), dcdd = br(dcd, D);
  int dcccc = br(dccc, C), dcccd = br(dccc, D), dccdd = br(dccd, D), dcddd = br(dcdd, D);
  int dcc_dc = br(dcc, dc), dcd_dc = br(dcd, dc);
  int dccccc = br(dcccc, C);

  Int R(r), S(s);
  std::vector<std::pair<int, Int>> expected = {
      {dc, R * S},
      {dcc, R * binomial(S, 2)},
      {dcd, binomial(R, 2) * S},
      {dccc, R * binomial(S, 3)},
      {dccd, binomial(R, 2) * binomial(S, 2)},
      {dcdd, binomial(R, 3) * S},
      {dcccc, R * binomial(S, 4)},
      {dcccd, binomial(R, 2) * binomial(S, 3)},
      {dccdd, binomial(R, 3) * binomial(S, 2)},
      {dcddd, binomial(R, 4) * S},
      {dcc_dc, 3 * binomial(R, 2) * binomial(S, 3) + 2 * binomial(R, 2) * binomial(S, 2) +
                   R * binomial(S, 3)},
      {dcd_dc, 4 * binomial(R, 3) * binomial(S, 2) + 2 * binomial(R, 3) * S +
                   3 * binomial(R, 2) * binomial(S, 2) + binomial(R, 2) * S},
      {dccccc, R * binomial(S, 5)},
  };

  ExponentVector lhs =
      ctx.commutator(ctx.power(ctx.generator("d"), r), ctx.power(ctx.generator("c"), s));
  for (const auto& [id, e] : expected)
    if (lhs.exponent(id) != e) return false;
  // Everything else in the collected form must die under the graded
  // weight-13 truncation (c counts 2, d counts 3).
  for (const auto& [id, e] : lhs.exponents()) {
    bool listed = false;
    for (const auto& [lid, le] : expected) listed |= (lid == id);
    if (!listed && graded_weight_cd(b, id) <= 13) return false;
  }
  return true;
}

}  // namespace nilcollect
