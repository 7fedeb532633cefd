#pragma once

#include <filesystem>
#include <memory>
#include <vector>

#include "nilcollect/collector.hpp"
#include "nilcollect/ints.hpp"

namespace nilcollect {

/// Polynomial with integer values at all integers, stored as integer
/// coefficients over the binomial basis C(t,0), C(t,1), C(t,2), ...
struct IntegerValuedPolynomial {
  std::vector<Int> coeffs;  // coeffs[j] multiplies C(t,j)

  Int eval(const Int& t) const {
    Int r = 0;
    for (size_t j = 0; j < coeffs.size(); ++j)
      if (coeffs[j] != 0) r += coeffs[j] * binomial(t, static_cast<unsigned>(j));
    return r;
  }
  int degree() const {
    for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j)
      if (coeffs[j] != 0) return j;
    return -1;
  }
  bool operator==(const IntegerValuedPolynomial& o) const;
};

/// Unique degree <= d interpolant through values at t = 0..d: coefficient of
/// C(t,j) is the j-th forward difference at 0.
IntegerValuedPolynomial ivp_from_values(std::vector<Int> values);

/// The exponent polynomials of the power expansion
///   (ab)^n = a^n b^n c_3^{f_3(n)} ... c_m^{f_m(n)}
/// on two unweighted generators a,b, one polynomial per basis element
/// (ids 1 and 2 carry the polynomial t).
class HallExpansion {
 public:
  HallExpansion(std::shared_ptr<const GroupContext> ctx,
                std::vector<IntegerValuedPolynomial> polys)
      : ctx_(std::move(ctx)), polys_(std::move(polys)) {}

  const GroupContext& context() const { return *ctx_; }
  std::shared_ptr<const GroupContext> context_ptr() const { return ctx_; }
  int class_bound() const { return ctx_->class_bound(); }
  const IntegerValuedPolynomial& poly(int id) const { return polys_.at(id - 1); }
  const std::vector<IntegerValuedPolynomial>& polys() const { return polys_; }

  /// Normal form of (ab)^n assembled by evaluation, no collection of powers.
  ExponentVector assemble(const Int& n) const;
  /// Normal form of b^{-n} a^{-n} (ab)^n: exponent f_i(n) on c_i, i >= 3.
  ExponentVector tail(const Int& n) const;

 private:
  std::shared_ptr<const GroupContext> ctx_;
  std::vector<IntegerValuedPolynomial> polys_;
};

/// Cache directory: $NILCOLLECT_CACHE, else a per-user cache location.
std::filesystem::path hallpoly_cache_dir();

/// Recover the expansion polynomials at the given class bound by collecting
/// (ab)^n for n = 0..class_bound and interpolating each coordinate. Results
/// are cached on disk and reloaded when the header matches.
HallExpansion hall_expansion(int class_bound, bool use_cache = true);

ExponentVector tail_of_power(const HallExpansion& he, const Int& n);

/// Normal form of [y^n, x] in `out`, assembled from the expansion
///   [y^n, x] = [y,x]^n * prod_{i>=3} (c_i alpha)^{f_i(n)}
/// with alpha: a -> y, b -> [y,x]. If exp_mod > 0 the assembled exponents are
/// reduced mod exp_mod first (sound when the caller only needs the result
/// modulo a subgroup containing g^exp_mod for all g in the derived subgroup).
ExponentVector power_commutator(const HallExpansion& he, const Int& n, const GroupContext& out,
                                const ExponentVector& y, const ExponentVector& x,
                                const Int& exp_mod = 0);

/// Checks the class-4 expansion of [c^r, d^s] into the six basic commutators
/// [c,d], [c,d,d], [c,d,d,d], [c,d,c], [c,d,d,c], [c,d,c,c] with exponents
/// rs, r*C(s,2), r*C(s,3), C(r,2)*s, C(r,2)*C(s,2), C(r,3)*s.
bool verify_weighted_expansion_gamma3(int r, int s);

/// Checks all 13 closed-form exponents in the expansion of [d^r, c^s] over
/// basic commutators in c,d, in a class-6 context; coordinates outside the
/// tabulated list must have graded (c:2, d:3) weight >= 14 (i.e. vanish under
/// the graded weight-13 truncation).
bool verify_drcs_table(int r, int s);

}  // namespace nilcollect
