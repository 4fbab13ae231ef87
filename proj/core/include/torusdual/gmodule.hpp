#pragma once

#include "torusdual/group.hpp"
#include "torusdual/int_matrix.hpp"
#include "torusdual/intlin.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace torusdual {

/// Finitely generated abelian group Z^n / (m_1 Z + ... + m_n Z) with a left action of a finite group.
/// Modulus 0 marks a free coordinate. Coordinates keep the order they were given in.
class GModule {
 public:
  GModule() = default;
  /// `action[g]` is the matrix of g in these coordinates. Verifies the identity, the homomorphism law
  /// modulo torsion, and that each matrix preserves the relations.
  GModule(GroupPtr group, IntVector moduli, std::vector<IntMatrix> action);

  /// Extends generator matrices to the whole group along words; inconsistent data is rejected.
  static GModule from_generators(GroupPtr group, IntVector moduli,
                                 const std::vector<std::pair<Element, IntMatrix>>& generator_action);
  static GModule trivial(GroupPtr group, IntVector moduli);
  static GModule trivial_free(GroupPtr group, std::size_t rank) { return trivial(std::move(group), IntVector(rank)); }

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t rank() const { return moduli_.size(); }
  const IntVector& moduli() const { return moduli_; }
  std::size_t free_rank() const;
  bool is_free() const { return free_rank() == rank(); }
  bool is_zero() const { return rank() == 0; }
  bool has_trivial_action() const;

  const IntMatrix& action(Element g) const { return action_[g]; }
  const std::vector<IntMatrix>& actions() const { return action_; }
  IntVector act(Element g, const IntVector& v) const { return reduce(action_[g].apply(v)); }
  IntVector reduce(IntVector v) const;
  bool equivalent(const IntVector& a, const IntVector& b) const { return reduce(a) == reduce(b); }

  /// Columns m_i e_i for the torsion coordinates.
  IntMatrix relations() const;
  /// Canonical shape of the underlying abelian group.
  FinAbGroup carrier() const { return FinAbGroup::from_relations(relations()); }
  /// The whole module as a subquotient of Z^rank.
  Subquotient as_subquotient() const;

  IntMatrix norm_matrix() const;

  friend bool operator==(const GModule& a, const GModule& b) {
    return *a.group_ == *b.group_ && a.moduli_ == b.moduli_ && a.action_ == b.action_;
  }

 private:
  GroupPtr group_;
  IntVector moduli_;
  std::vector<IntMatrix> action_;
};

/// Contragredient dual Hom(L, Z) with g acting by the transpose of the action of g^{-1}. Free modules only.
GModule dual_lattice(const GModule& l);
/// Tensor product over Z with diagonal action; coordinate (i, j) sits at i * rank(b) + j.
GModule tensor(const GModule& a, const GModule& b);
GModule direct_sum(const GModule& a, const GModule& b);
GModule restrict_to(const GModule& a, const Subgroup& h);
/// Module for `source` acting through the map `to_group` into a's group.
GModule pullback(const GModule& a, GroupPtr source, const std::vector<Element>& to_group);
/// Augmentation ideal of Z[G] with basis g - 1 for g != e, left multiplication action.
GModule augmentation_ideal(GroupPtr group);
/// Same module in new coordinates x' = P x, for unimodular P. Free modules only.
GModule change_basis(const GModule& a, const IntMatrix& p);

/// A^G inside Z^rank (contains the relations) modulo the relations.
Subquotient invariants(const GModule& a);
/// A / (I_G A + relations).
Subquotient coinvariants(const GModule& a);
/// N_G as a map A -> A^G in canonical coordinates.
GroupHom norm_hom(const GModule& a);
/// Stacked columns (g - 1) for g != e; their span plus the relations is I_G A.
IntMatrix augmentation_columns(const GModule& a);

}  // namespace torusdual
