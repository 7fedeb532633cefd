#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nilcollect/ints.hpp"

namespace nilcollect {

struct GeneratorDecl {
  std::string name;
  int weight = 1;
};

/// One node of the Hall basis: either a generator or a bracket [left,right]
/// of two earlier basis elements satisfying the Hall condition.
struct BasicCommutator {
  int id = 0;      // 1-based position in the basis
  int weight = 0;  // sum of declared generator weights of the leaves
  int left = 0;    // 0 for generators
  int right = 0;   // 0 for generators
  int gen = 0;     // 1-based generator index, 0 for brackets

  bool is_generator() const { return gen != 0; }
};

/// The ordered Hall basis of basic commutators on (optionally weighted)
/// generators, up to a weight cap. Immutable after construction.
class Basis {
 public:
  Basis(std::vector<GeneratorDecl> generators, int max_weight);

  int size() const { return static_cast<int>(elements_.size()); }
  int max_weight() const { return max_weight_; }
  int rank() const { return static_cast<int>(generators_.size()); }
  const std::vector<GeneratorDecl>& generators() const { return generators_; }
  const std::vector<BasicCommutator>& elements() const { return elements_; }

  const BasicCommutator& at(int id) const { return elements_.at(id - 1); }
  int weight_of(int id) const { return at(id).weight; }

  /// Id of the basis element [left,right], or 0 if there is no such element.
  int bracket_id(int left, int right) const;
  /// Id of the named generator, or 0.
  int generator_id(std::string_view name) const;

  /// True when [u,v] meets the Hall condition relative to this basis.
  bool hall_condition(int u, int v) const;

  int count_weight(int w) const;
  int count_up_to(int w) const;

  /// Bracket string, flattening the left spine: [[b,a],a] prints as
  /// [b,a,a], [[b,a,a],[b,a]] as [b,a,a,[b,a]].
  std::string str(int id) const;

 private:
  std::vector<GeneratorDecl> generators_;
  int max_weight_;
  std::vector<BasicCommutator> elements_;
  std::map<std::pair<int, int>, int> bracket_index_;
  std::map<std::string, int, std::less<>> generator_index_;
};

/// Number of weight-n basic commutators on `rank` unweighted generators:
/// (1/n) * sum_{d|n} mu(d) * rank^(n/d).
Int witt_count(int rank, int weight);

}  // namespace nilcollect
