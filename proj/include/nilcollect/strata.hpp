#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilcollect/collector.hpp"
#include "nilcollect/expr.hpp"
#include "nilcollect/ints.hpp"
#include "nilcollect/power_polys.hpp"

namespace nilcollect {

/// One weight band of a stratification: coordinates of weight >= min_weight
/// (up to the next band) are scaled by K_scale in K and N_scale in N.
struct Band {
  int min_weight;
  Int K_scale;
  Int N_scale;
};

/// Weight-banded pair of subgroups N <= K of the derived subgroup, chosen so
/// that K/N is a direct product of cyclic groups of order m: a coordinate of
/// weight w lies in K when divisible by K_scale(w), in N when divisible by
/// N_scale(w) = m * K_scale(w).
struct StratificationSpec {
  unsigned p = 0;
  Int q;
  int class_bound = 0;
  unsigned m = 0;
  std::vector<Band> bands;  // ascending min_weight, first band at weight 2

  /// p=2, q >= 32: bands (2: q/8q), (3: q/2 / 4q), (5: q/4 / 2q), (8: q/8 / q), m=8.
  static StratificationSpec power2(const Int& q, int class_bound = 13);
  /// p=3, q >= 27: bands (2: q/9q), (3: q/3 / 3q), (7: q/9 / q), m=9.
  static StratificationSpec power3(const Int& q, int class_bound = 13);
  /// p=5, q >= 25: bands (2: q/5q), (3: q/5 / q), m=5.
  static StratificationSpec power5(const Int& q, int class_bound = 10);
  static StratificationSpec by_name(const std::string& name, const Int& q, int class_bound);

  const Band& band_for(int weight) const;
  const Int& K_scale(int weight) const { return band_for(weight).K_scale; }
  const Int& N_scale(int weight) const { return band_for(weight).N_scale; }
};

/// Coordinate vector of a coset kN in C_m^r; entry j corresponds to basis
/// id j+3 (the first two ids are the generators). Zero vector <=> k in N.
struct RepVector {
  const StratificationSpec* spec = nullptr;
  std::vector<unsigned> entries;

  bool is_zero() const {
    for (unsigned e : entries)
      if (e) return false;
    return true;
  }
  RepVector operator+(const RepVector& o) const;
  RepVector operator-() const;
  bool operator==(const RepVector& o) const { return entries == o.entries; }
  bool operator!=(const RepVector& o) const { return !(*this == o); }
};

/// Membership tests; u must lie in the derived subgroup (zero exponents on
/// the generators) and be computed at the spec's class bound.
bool in_K(const ExponentVector& u, const StratificationSpec& spec);
bool in_N(const ExponentVector& u, const StratificationSpec& spec);

/// Representative vector of uN: coordinate i -> (exponent_i / K_scale) mod m.
/// Requires in_K(u); the error names the first offending coordinate.
RepVector rv(const ExponentVector& u, const StratificationSpec& spec);

/// rv of [y^q, x], assembled through the cached power-expansion polynomials
/// (never by collecting the q-fold word); exponents are reduced mod m*q,
/// which fixes the coset of N. A failed in_K precondition is a hard error.
RepVector rv_power_commutator(const ExprPtr& x, const ExprPtr& y, const StratificationSpec& spec,
                              const HallExpansion& he, const GroupContext& ctx);

/// Additive span over Z_m (m = p^e) in echelon form with closure rows, so
/// membership is decided by reduction.
class SpanState {
 public:
  explicit SpanState(const StratificationSpec& spec) : spec_(&spec) {}

  const StratificationSpec& spec() const { return *spec_; }
  /// Returns true when the vector enlarged the span.
  bool add(const RepVector& v);
  bool contains(const RepVector& v) const;
  int pivot_count() const { return static_cast<int>(rows_.size()); }
  /// counts[a] = number of pivots of p-adic valuation a (order m/p^a cyclic factors).
  std::vector<int> rank_profile() const;

 private:
  void insert(std::vector<unsigned> row);

  const StratificationSpec* spec_;
  std::map<int, std::vector<unsigned>> rows_;  // pivot column -> normalized row
};

/// Deterministic sample family: words over the generators with letter
/// exponents +-1, of length 1..max_len, deduplicated by class-2 normal form.
std::vector<ExprPtr> enumerate_sample_words(int max_len, const GroupContext& class2_ctx);

}  // namespace nilcollect
