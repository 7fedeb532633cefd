#include "nilcollect/strata.hpp"

#include <algorithm>
#include <set>

namespace nilcollect {

namespace {

bool is_power_of(Int q, unsigned p) {
  if (q < 1) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

void validate(const StratificationSpec& s, const Int& min_q, int max_class) {
  if (!is_power_of(s.q, s.p) || s.q < min_q)
    throw std::invalid_argument("stratification: q must be a power of " + std::to_string(s.p) +
                                " and at least " + to_string(min_q));
  if (s.class_bound < 2 || s.class_bound > max_class)
    throw std::invalid_argument("stratification: class bound must be in [2," +
                                std::to_string(max_class) + "]");
}

}  // namespace

StratificationSpec StratificationSpec::power2(const Int& q, int class_bound) {
  StratificationSpec s{2, q, class_bound, 8,
                       {{2, q, 8 * q}, {3, q / 2, 4 * q}, {5, q / 4, 2 * q}, {8, q / 8, q}}};
  validate(s, 32, 13);
  return s;
}

StratificationSpec StratificationSpec::power3(const Int& q, int class_bound) {
  StratificationSpec s{3, q, class_bound, 9, {{2, q, 9 * q}, {3, q / 3, 3 * q}, {7, q / 9, q}}};
  validate(s, 27, 13);
  return s;
}

StratificationSpec StratificationSpec::power5(const Int& q, int class_bound) {
  StratificationSpec s{5, q, class_bound, 5, {{2, q, 5 * q}, {3, q / 5, q}}};
  validate(s, 25, 10);
  return s;
}

StratificationSpec StratificationSpec::by_name(const std::string& name, const Int& q,
                                               int class_bound) {
  if (name == "2power") return power2(q, class_bound);
  if (name == "3power") return power3(q, class_bound);
  if (name == "5power") return power5(q, class_bound);
  throw std::invalid_argument("unknown stratification '" + name +
                              "' (expected 2power, 3power or 5power)");
}

const Band& StratificationSpec::band_for(int weight) const {
  if (weight < 2) throw std::invalid_argument("stratification bands start at weight 2");
  const Band* best = nullptr;
  for (const auto& b : bands)
    if (b.min_weight <= weight) best = &b;
  if (!best) throw std::logic_error("stratification: no band for weight");
  return *best;
}

RepVector RepVector::operator+(const RepVector& o) const {
  if (!spec || spec != o.spec || entries.size() != o.entries.size())
    throw std::invalid_argument("rep vector addition: mismatched specs");
  RepVector r{spec, entries};
  for (size_t i = 0; i < entries.size(); ++i) r.entries[i] = (entries[i] + o.entries[i]) % spec->m;
  return r;
}

RepVector RepVector::operator-() const {
  RepVector r{spec, entries};
  for (auto& e : r.entries) e = e ? spec->m - e : 0;
  return r;
}

namespace {

const GroupContext& context_of(const ExponentVector& u, const StratificationSpec& spec) {
  const GroupContext* ctx = u.context();
  if (!ctx) throw std::invalid_argument("exponent vector has no context");
  if (ctx->class_bound() != spec.class_bound)
    throw std::invalid_argument("exponent vector computed at class " +
                                std::to_string(ctx->class_bound()) + ", spec expects " +
                                std::to_string(spec.class_bound));
  return *ctx;
}

void require_derived(const ExponentVector& u, const GroupContext& ctx) {
  for (const auto& [id, e] : u.exponents())
    if (ctx.basis().weight_of(id) < 2)
      throw std::invalid_argument("element lies outside the derived subgroup (nonzero exponent on " +
                                  ctx.basis().str(id) + ")");
}

bool scaled_membership(const ExponentVector& u, const StratificationSpec& spec, bool use_N) {
  const GroupContext& ctx = context_of(u, spec);
  require_derived(u, ctx);
  for (const auto& [id, e] : u.exponents()) {
    const Band& band = spec.band_for(ctx.basis().weight_of(id));
    if (e % (use_N ? band.N_scale : band.K_scale) != 0) return false;
  }
  return true;
}

}  // namespace

bool in_K(const ExponentVector& u, const StratificationSpec& spec) {
  return scaled_membership(u, spec, false);
}

bool in_N(const ExponentVector& u, const StratificationSpec& spec) {
  return scaled_membership(u, spec, true);
}

RepVector rv(const ExponentVector& u, const StratificationSpec& spec) {
  const GroupContext& ctx = context_of(u, spec);
  require_derived(u, ctx);
  RepVector r{&spec, std::vector<unsigned>(std::max(0, ctx.basis().size() - 2), 0)};
  for (const auto& [id, e] : u.exponents()) {
    const Band& band = spec.band_for(ctx.basis().weight_of(id));
    if (e % band.K_scale != 0)
      throw std::invalid_argument("not in K: exponent " + to_string(e) + " on " +
                                  ctx.basis().str(id) + " is not divisible by " +
                                  to_string(band.K_scale));
    r.entries[id - 3] =
        static_cast<unsigned>(mod_floor(e / band.K_scale, Int(spec.m)).get_ui());
  }
  return r;
}

RepVector rv_power_commutator(const ExprPtr& x, const ExprPtr& y, const StratificationSpec& spec,
                              const HallExpansion& he, const GroupContext& ctx) {
  if (ctx.class_bound() != spec.class_bound)
    throw std::invalid_argument("rv_power_commutator: context class does not match the spec");
  if (he.class_bound() < spec.class_bound)
    throw std::invalid_argument("rv_power_commutator: expansion class too small");
  ExponentVector nfx = eval(x, ctx);
  ExponentVector nfy = eval(y, ctx);
  Int mq = spec.q * spec.m;
  ExponentVector u = power_commutator(he, spec.q, ctx, nfy, nfx, mq);
  if (!in_K(u, spec))
    throw std::runtime_error("rv_power_commutator: [y^q,x] is NOT in K for x=" + print(x) +
                             ", y=" + print(y) + ", q=" + to_string(spec.q) +
                             " — this falsifies the banded-membership lemma");
  return rv(u, spec);
}

namespace {

unsigned pow_u(unsigned b, unsigned e) {
  unsigned r = 1;
  while (e--) r *= b;
  return r;
}

unsigned val_of(unsigned x, unsigned p) {
  unsigned a = 0;
  while (x % p == 0) {
    x /= p;
    ++a;
  }
  return a;
}

unsigned inverse_mod(unsigned u, unsigned m) {
  for (unsigned i = 1; i < m; ++i)
    if (i * u % m == 1) return i;
  throw std::logic_error("no modular inverse");
}

}  // namespace

bool SpanState::add(const RepVector& v) {
  if (v.spec != spec_)
    throw std::invalid_argument("span: rep vector from a different stratification");
  if (contains(v)) return false;
  insert(v.entries);
  return true;
}

void SpanState::insert(std::vector<unsigned> row) {
  unsigned m = spec_->m, p = spec_->p;
  unsigned e = val_of(m, p);
  for (size_t col = 0; col < row.size(); ++col) {
    while (row[col] % m != 0) {
      auto it = rows_.find(static_cast<int>(col));
      unsigned b = val_of(row[col], p);
      if (it == rows_.end()) {
        unsigned inv = inverse_mod(row[col] / pow_u(p, b), m);
        for (auto& x : row) x = x * inv % m;
        rows_[static_cast<int>(col)] = row;
        if (b > 0) {
          // Closure row: p^{e-b} times the pivot row keeps the span Howell-
          // complete, so membership is decidable by straight reduction.
          std::vector<unsigned> closure = row;
          unsigned f = pow_u(p, e - b);
          for (auto& x : closure) x = x * f % m;
          insert(std::move(closure));
        }
        return;
      }
      unsigned a = val_of(it->second[col], p);
      if (b >= a) {
        unsigned t = row[col] / pow_u(p, a);  // pivot entry is exactly p^a
        for (size_t i = col; i < row.size(); ++i)
          row[i] = (row[i] + (m - t % m) * it->second[i]) % m;
      } else {
        std::swap(row, it->second);
        unsigned inv = inverse_mod(it->second[col] / pow_u(p, b), m);
        for (auto& x : it->second) x = x * inv % m;
        if (b > 0) {
          std::vector<unsigned> closure = it->second;
          unsigned f = pow_u(p, e - b);
          for (auto& x : closure) x = x * f % m;
          insert(std::move(closure));
        }
      }
    }
    row[col] = 0;
  }
}

bool SpanState::contains(const RepVector& v) const {
  if (v.spec != spec_)
    throw std::invalid_argument("span: rep vector from a different stratification");
  unsigned m = spec_->m, p = spec_->p;
  std::vector<unsigned> row = v.entries;
  for (size_t col = 0; col < row.size(); ++col) {
    if (row[col] % m == 0) {
      row[col] = 0;
      continue;
    }
    auto it = rows_.find(static_cast<int>(col));
    if (it == rows_.end()) return false;
    unsigned a = val_of(it->second[col], p);
    if (row[col] % pow_u(p, a) != 0) return false;
    unsigned t = row[col] / pow_u(p, a);
    for (size_t i = col; i < row.size(); ++i)
      row[i] = (row[i] + (m - t % m) * it->second[i]) % m;
  }
  return true;
}

std::vector<int> SpanState::rank_profile() const {
  unsigned e = val_of(spec_->m, spec_->p);
  std::vector<int> counts(e, 0);
  for (const auto& [col, row] : rows_) ++counts[val_of(row[col], spec_->p)];
  return counts;
}

std::vector<ExprPtr> enumerate_sample_words(int max_len, const GroupContext& class2_ctx) {
  std::vector<ExprPtr> letters;
  for (const auto& g : class2_ctx.basis().generators()) {
    letters.push_back(Expr::gen(g.name));
    letters.push_back(Expr::power(Expr::gen(g.name), -1));
  }
  std::vector<ExprPtr> out;
  std::set<std::string> seen;
  std::vector<size_t> idx;
  auto emit = [&]() {
    std::vector<ExprPtr> parts;
    for (size_t i : idx) parts.push_back(letters[i]);
    ExprPtr w = Expr::product(std::move(parts));
    ExponentVector nf = eval(w, class2_ctx);
    std::string key;
    for (const auto& [id, ex] : nf.exponents()) key += std::to_string(id) + ":" + to_string(ex) + ";";
    if (seen.insert(key).second) out.push_back(std::move(w));
  };
  for (int len = 1; len <= max_len; ++len) {
    idx.assign(len, 0);
    while (true) {
      emit();
      int i = len - 1;
      while (i >= 0 && ++idx[i] == letters.size()) idx[i--] = 0;
      if (i < 0) break;
    }
  }
  return out;
}

}  // namespace nilcollect
