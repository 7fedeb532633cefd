#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "nilcollect/collector.hpp"
#include "nilcollect/expr.hpp"
#include "nilcollect/hall_basis.hpp"
#include "nilcollect/ints.hpp"

namespace nilcollect {

/// Truncated noncommutative polynomial ring Z<x_1..x_k> / (degree > cap),
/// graded by per-variable degrees. Hosts the embedding g_i -> 1 + x_i, an
/// independent correctness oracle for the collector.
class MagnusRing {
 public:
  MagnusRing(std::vector<int> var_degrees, int cap) : degrees_(std::move(var_degrees)), cap_(cap) {
    if (cap_ < 1) throw std::invalid_argument("magnus: cap must be >= 1");
    for (int d : degrees_)
      if (d < 1) throw std::invalid_argument("magnus: variable degree must be >= 1");
  }
  /// Ring matching a basis: one variable per generator, carrying its weight.
  explicit MagnusRing(const Basis& b) : cap_(b.max_weight()) {
    for (const auto& g : b.generators()) degrees_.push_back(g.weight);
  }

  int cap() const { return cap_; }
  int vars() const { return static_cast<int>(degrees_.size()); }
  int degree(const std::vector<int>& monomial) const {
    int d = 0;
    for (int v : monomial) d += degrees_.at(v);
    return d;
  }

 private:
  std::vector<int> degrees_;
  int cap_;
};

/// Element of the truncated ring: sparse map from monomial (sequence of
/// 0-based variable indices) to coefficient.
class Series {
 public:
  using Terms = std::map<std::vector<int>, Int>;

  explicit Series(const MagnusRing* ring) : ring_(ring) {}

  static Series one(const MagnusRing& r) {
    Series s(&r);
    s.terms_[{}] = 1;
    return s;
  }
  /// Group image of generator v: 1 + x_v.
  static Series unit_plus_var(const MagnusRing& r, int v) {
    Series s = one(r);
    s.terms_[{v}] = 1;
    return s;
  }

  const Terms& terms() const { return terms_; }
  Int coefficient(const std::vector<int>& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
  }
  bool operator==(const Series& o) const { return terms_ == o.terms_; }
  bool operator!=(const Series& o) const { return !(*this == o); }

  Series operator*(const Series& o) const;
  /// Inverse of a series with constant term 1 (geometric series).
  Series inverse() const;
  Series pow(const Int& n) const;

 private:
  const MagnusRing* ring_;
  Terms terms_;
};

/// Image of a basis element: generators map to 1 + x, brackets to the
/// multiplicative commutator of the images.
Series magnus_basis_image(const MagnusRing& r, const Basis& b, int id);

/// Image of a word of (basis id, exponent) factors.
Series magnus_image(const MagnusRing& r, const Basis& b, const Word& w);

/// Image of a parsed expression (brackets become series commutators).
Series magnus_expr_image(const MagnusRing& r, const Basis& b, const ExprPtr& e);

/// True iff the word and the collected normal form have the same image,
/// i.e. the collector's answer survives the embedding.
bool check_normal_form(const MagnusRing& r, const Basis& b, const Word& w, const ExponentVector& nf);

}  // namespace nilcollect
