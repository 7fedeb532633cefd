#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <tuple>
#include <vector>

#include "nilcollect/hall_basis.hpp"
#include "nilcollect/ints.hpp"

namespace nilcollect {

class GroupContext;

/// Normal form c_1^{n_1} c_2^{n_2} ... c_m^{n_m} of an element of the free
/// nilpotent group F/gamma_{c+1}(F). Immutable value; absent id means
/// exponent zero.
class ExponentVector {
 public:
  using Map = std::map<int, Int>;

  ExponentVector() = default;
  explicit ExponentVector(const GroupContext* ctx) : ctx_(ctx) {}

  const GroupContext* context() const { return ctx_; }
  const Map& exponents() const { return exps_; }
  Map& exponents() { return exps_; }

  Int exponent(int id) const {
    auto it = exps_.find(id);
    return it == exps_.end() ? Int(0) : it->second;
  }
  void add(int id, const Int& e) {
    if (e == 0) return;
    auto [it, inserted] = exps_.try_emplace(id, e);
    if (!inserted) {
      it->second += e;
      if (it->second == 0) exps_.erase(it);
    }
  }
  bool is_identity() const { return exps_.empty(); }
  /// Smallest weight present, or 0 for the identity.
  int min_weight() const;

  bool operator==(const ExponentVector& o) const { return exps_ == o.exps_; }
  bool operator!=(const ExponentVector& o) const { return !(*this == o); }

 private:
  const GroupContext* ctx_ = nullptr;
  Map exps_;
};

/// A word over the basis: sequence of (basis id, exponent) factors.
using Word = std::vector<std::pair<int, Int>>;

/// Exact arithmetic in F/gamma_{c+1}(F) by collection from the left.
/// The pairwise commutation rules [c_j,c_i] are computed on demand by
/// recursive collection and memoized; all exponents are arbitrary precision.
///
/// Immutable after construction apart from the internally synchronized
/// memo tables; safe for concurrent readers.
class GroupContext {
 public:
  explicit GroupContext(Basis basis);

  const Basis& basis() const { return basis_; }
  int class_bound() const { return basis_.max_weight(); }

  ExponentVector identity() const { return ExponentVector(this); }
  ExponentVector element(int id, Int exp = 1) const;
  ExponentVector generator(std::string_view name) const;

  ExponentVector multiply(ExponentVector u, const ExponentVector& v) const;
  /// u * c_k^n.
  ExponentVector multiply_factor(ExponentVector u, int k, const Int& n) const;
  ExponentVector inverse(const ExponentVector& u) const;
  ExponentVector power(const ExponentVector& u, const Int& n) const;
  /// [u,v] = u^{-1} v^{-1} u v.
  ExponentVector commutator(const ExponentVector& u, const ExponentVector& v) const;

  ExponentVector normal_form(const Word& w) const;

  /// Normal form of [c_j, c_k^n] for j > k.
  ExponentVector letter_comm_power(int j, int k, const Int& n) const;

 private:
  ExponentVector comm_letter(int j, int i) const;  // [c_j, c_i], j > i
  /// c_j^{c_k^n} = c_j * [c_j, c_k^n], j > k.
  ExponentVector conj_elem(int j, int k, const Int& n) const;
  /// x^{c_k^n}; every id in x must exceed k.
  ExponentVector conj_by(const ExponentVector& x, int k, const Int& n) const;
  void check_context(const ExponentVector& u) const;

  Basis basis_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::pair<int, int>, ExponentVector> comm_memo_;
  mutable std::map<std::tuple<int, int, Int>, ExponentVector> comm_power_memo_;
};

/// Image of `target` under the endomorphism sending source generator i to
/// gen_images[i-1] (a normal form over `out`). Brackets map to commutators
/// of images; the result is collected in `out`.
ExponentVector substitute(const std::vector<ExponentVector>& gen_images,
                          const Basis& source_basis, const ExponentVector& target,
                          const GroupContext& out);

/// Quotient map to a lower class bound over the same generators: drop the
/// coordinates whose weight exceeds out.class_bound().
ExponentVector project(const ExponentVector& u, const GroupContext& out);

}  // namespace nilcollect
