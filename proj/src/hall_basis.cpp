#include "nilcollect/hall_basis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nilcollect {

Basis::Basis(std::vector<GeneratorDecl> generators, int max_weight)
    : generators_(std::move(generators)), max_weight_(max_weight) {
  if (generators_.empty()) throw std::invalid_argument("basis: need at least one generator");
  if (max_weight_ < 1) throw std::invalid_argument("basis: max_weight must be >= 1");

  std::set<std::string> names;
  for (const auto& g : generators_) {
    if (g.weight < 1) throw std::invalid_argument("basis: generator weight must be >= 1");
    if (!names.insert(g.name).second)
      throw std::invalid_argument("basis: duplicate generator name '" + g.name + "'");
  }

  // Generators come first, in declaration order.
  for (int i = 0; i < static_cast<int>(generators_.size()); ++i) {
    if (generators_[i].weight > max_weight_) continue;
    BasicCommutator e;
    e.id = static_cast<int>(elements_.size()) + 1;
    e.weight = generators_[i].weight;
    e.gen = i + 1;
    generator_index_[generators_[i].name] = e.id;
    elements_.push_back(e);
  }

  // Brackets by increasing weight; within a weight class by (left,right).
  int min_gen_weight = max_weight_ + 1;
  for (const auto& g : generators_) min_gen_weight = std::min(min_gen_weight, g.weight);
  for (int w = 2 * min_gen_weight; w <= max_weight_; ++w) {
    std::vector<std::pair<int, int>> found;
    int prior = static_cast<int>(elements_.size());
    for (int u = 1; u <= prior; ++u) {
      if (elements_[u - 1].weight >= w) continue;
      for (int v = 1; v < u; ++v) {
        if (elements_[u - 1].weight + elements_[v - 1].weight != w) continue;
        if (hall_condition(u, v)) found.emplace_back(u, v);
      }
    }
    std::sort(found.begin(), found.end());
    for (auto [u, v] : found) {
      BasicCommutator e;
      e.id = static_cast<int>(elements_.size()) + 1;
      e.weight = w;
      e.left = u;
      e.right = v;
      bracket_index_[{u, v}] = e.id;
      elements_.push_back(e);
    }
  }
}

bool Basis::hall_condition(int u, int v) const {
  if (u <= v) return false;
  const BasicCommutator& ue = at(u);
  return ue.is_generator() || ue.right <= v;
}

int Basis::bracket_id(int left, int right) const {
  auto it = bracket_index_.find({left, right});
  return it == bracket_index_.end() ? 0 : it->second;
}

int Basis::generator_id(std::string_view name) const {
  auto it = generator_index_.find(name);
  return it == generator_index_.end() ? 0 : it->second;
}

int Basis::count_weight(int w) const {
  int n = 0;
  for (const auto& e : elements_) n += (e.weight == w);
  return n;
}

int Basis::count_up_to(int w) const {
  int n = 0;
  for (const auto& e : elements_) n += (e.weight <= w);
  return n;
}

namespace {
void flatten(const Basis& b, int id, std::vector<std::string>& parts) {
  const BasicCommutator& e = b.at(id);
  if (e.is_generator()) {
    parts.push_back(b.generators()[e.gen - 1].name);
    return;
  }
  flatten(b, e.left, parts);
  const BasicCommutator& r = b.at(e.right);
  parts.push_back(r.is_generator() ? b.generators()[r.gen - 1].name : b.str(e.right));
}
}  // namespace

std::string Basis::str(int id) const {
  const BasicCommutator& e = at(id);
  if (e.is_generator()) return generators_[e.gen - 1].name;
  std::vector<std::string> parts;
  flatten(*this, id, parts);
  std::string out = "[";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  out += "]";
  return out;
}

Int witt_count(int rank, int weight) {
  if (rank < 1 || weight < 1) throw std::invalid_argument("witt_count: rank and weight must be >= 1");
  Int sum = 0;
  for (int d = 1; d <= weight; ++d) {
    if (weight % d != 0) continue;
    Int term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(rank),
                  static_cast<unsigned long>(weight / d));
    sum += mobius(static_cast<unsigned>(d)) * term;
  }
  return sum / weight;
}

}  // namespace nilcollect
