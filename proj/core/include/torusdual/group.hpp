#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace torusdual {

using Element = std::size_t;
using Permutation = std::vector<std::size_t>;

/// Finite group given by a verified multiplication table. Element 0 is the identity.
class FiniteGroup {
 public:
  /// Throws ContractViolation when the table is not a group law with identity 0.
  explicit FiniteGroup(std::vector<std::vector<Element>> table, std::vector<std::string> labels = {});

  static FiniteGroup cyclic(std::size_t n);
  /// Closure of the given permutations of {0, ..., m-1}; elements in breadth-first order, identity first.
  /// Composition is (p q)(x) = p(q(x)).
  static FiniteGroup from_permutations(const std::vector<Permutation>& generators);
  static FiniteGroup symmetric3();

  std::size_t order() const { return table_.size(); }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element power(Element a, long k) const;
  std::size_t element_order(Element a) const;
  bool is_abelian() const;
  bool is_cyclic() const;

  const std::vector<std::vector<Element>>& table() const { return table_; }
  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Permutation realizing each element, when built from permutations.
  const std::vector<Permutation>& permutations() const { return permutations_; }

  /// A generating set, chosen greedily in element order.
  std::vector<Element> generators() const;
  /// Shortest word in the given generators for each element (breadth-first), as generator indices.
  std::vector<std::vector<std::size_t>> words(const std::vector<Element>& gens) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::vector<Permutation> permutations_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Subgroup with its inclusion map; subgroup element k is parent element embedding[k].
struct Subgroup {
  GroupPtr group;
  std::vector<Element> embedding;

  std::size_t order() const { return embedding.size(); }
  /// Subgroup index of a parent element, or order() when absent.
  std::size_t index_of(Element parent) const;
};

/// Subgroup generated by the given parent elements; elements are listed in increasing parent order.
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens);

/// All subgroups, ordered by size then elements.
/// Throws SizeLimitExceeded when |G| exceeds `bound`.
std::vector<Subgroup> subgroups(const FiniteGroup& g, std::size_t bound = 24);

/// Representatives of the right cosets H g, one per coset, each the least element of its coset.
std::vector<Element> right_coset_representatives(const FiniteGroup& g, const Subgroup& h);

/// Whether h is normal in g.
bool is_normal(const FiniteGroup& g, const Subgroup& h);

}  // namespace torusdual
