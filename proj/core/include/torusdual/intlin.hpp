#pragma once

#include "torusdual/int_matrix.hpp"
#include "torusdual/integer.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace torusdual {

/// U * M * V = D with U, V unimodular and D diagonal in divisor-chain form.
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  /// Present only when requested through SmithOptions.
  IntMatrix U_inverse;
  IntMatrix V_inverse;
  /// d_1 | d_2 | ... over the first min(rows, cols) diagonal positions, zeros last.
  IntVector invariant_factors;
  std::size_t rank = 0;
};

struct SmithOptions {
  bool left = true;
  bool right = true;
  bool left_inverse = false;
  bool right_inverse = false;
};

/// Smith normal form. Pivots on the smallest nonzero entry to damp coefficient growth.
SmithDecomposition snf(const IntMatrix& m, SmithOptions options = {});

std::size_t rank_of(const IntMatrix& m);

/// Inverse of a unimodular matrix; throws DomainError otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// A sublattice of Z^n stored by its row Hermite normal form (canonical, so equality is matrix equality).
class Lattice {
 public:
  explicit Lattice(std::size_t dim = 0) : dim_(dim), basis_(0, dim) {}

  static Lattice from_rows(const IntMatrix& generators);
  static Lattice from_columns(const IntMatrix& generators);
  static Lattice full(std::size_t dim);
  /// Lattice spanned by m_i e_i for every nonzero modulus m_i.
  static Lattice diagonal(const IntVector& moduli);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.rows(); }
  /// Rows form the HNF basis.
  const IntMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Integer coordinates of v in the HNF basis, if v lies in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }
  bool contains(const Lattice& other) const;
  Lattice operator+(const Lattice& other) const;
  /// [Z^n : L]; requires full rank.
  Integer index() const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.dim_ == b.dim_ && a.basis_ == b.basis_; }

 private:
  std::size_t dim_;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Z-basis (as columns) of {x : M x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);
Lattice kernel_lattice(const IntMatrix& m);

/// {x in Z^cols : M x lies in the column span of `relations`} (relations has M.rows() rows).
Lattice preimage_lattice(const IntMatrix& m, const IntMatrix& relations);

/// Some x with M x == b, where row i is taken modulo moduli[i] when that entry is nonzero.
/// An empty moduli vector means every row is exact. Returns nullopt when unsolvable.
std::optional<IntVector> solve(const IntMatrix& m, const IntVector& b, const IntVector& moduli = {});

/// Finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_k (d_i >= 2, d_i | d_{i+1}),
/// together with coordinate maps to and from an ambient Z^n presentation.
/// Canonical coordinates list the free part first, then the torsion part.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  /// Ambient presentation equals the canonical coordinates.
  static FinAbGroup from_invariants(std::size_t free_rank, IntVector torsion);
  /// Z^n / (column span of relations), n = relations.rows().
  static FinAbGroup from_relations(const IntMatrix& relations);

  std::size_t free_rank() const { return free_rank_; }
  const IntVector& torsion() const { return torsion_; }
  std::size_t num_coordinates() const { return free_rank_ + torsion_.size(); }
  std::size_t ambient_dim() const { return to_canonical_.cols(); }
  /// Per canonical coordinate: 0 for free, d_i otherwise.
  IntVector moduli() const;

  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  /// Group order; 0 when infinite.
  Integer order() const;
  /// Order of an element given in canonical coordinates; 0 when infinite.
  Integer element_order(const IntVector& coords) const;
  bool annihilated_by(const Integer& n) const;

  IntVector reduce(IntVector coords) const;
  IntVector coordinates(const IntVector& ambient) const;
  IntVector ambient_element(const IntVector& coords) const;
  const IntMatrix& to_canonical() const { return to_canonical_; }
  const IntMatrix& from_canonical() const { return from_canonical_; }

  /// "0", "Z", "Z^2 x Z/2 x Z/4", ...
  std::string to_string() const;

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
    return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
  }

 private:
  std::size_t free_rank_ = 0;
  IntVector torsion_;
  IntMatrix to_canonical_;
  IntMatrix from_canonical_;
};

/// Z^rows / column-span(M) in canonical form with coordinate maps.
FinAbGroup cokernel_structure(const IntMatrix& m);

/// Relations of the canonical coordinates: d_i e_i for the torsion coordinates.
Lattice relation_lattice(const FinAbGroup& g);

/// Quotient N / B of lattices B <= N <= Z^n, with canonical coordinates for elements of N.
/// Every (co)homology group in the library is one of these.
class Subquotient {
 public:
  Subquotient() = default;
  /// `denominator` columns must lie in `numerator`.
  Subquotient(Lattice numerator, const IntMatrix& denominator);

  const FinAbGroup& group() const { return group_; }
  const Lattice& numerator() const { return numerator_; }
  std::size_t ambient_dim() const { return numerator_.dim(); }

  bool contains(const IntVector& v) const { return numerator_.contains(v); }
  /// Canonical coordinates; throws ContractViolation when v is outside the numerator.
  IntVector coordinates(const IntVector& v) const;
  bool is_zero_class(const IntVector& v) const;
  /// Ambient representative of the k-th canonical generator.
  IntVector representative(std::size_t k) const;
  IntVector lift(const IntVector& coords) const;

 private:
  Lattice numerator_;
  FinAbGroup group_;
};

/// Homomorphism between groups in canonical coordinates; matrix is target-coords x source-coords.
class GroupHom {
 public:
  GroupHom() = default;
  GroupHom(FinAbGroup source, FinAbGroup target, IntMatrix matrix);

  const FinAbGroup& source() const { return source_; }
  const FinAbGroup& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector apply(const IntVector& source_coords) const;
  /// Preimage of zero, in Z^{source coords}; contains the source relations.
  Lattice kernel() const;
  /// Image plus target relations, in Z^{target coords}.
  Lattice image() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  bool is_zero() const;
  /// Same map after reducing both matrices modulo the target.
  bool same_as(const GroupHom& other) const;
  /// (*this) after `first`.
  GroupHom after(const GroupHom& first) const;

 private:
  FinAbGroup source_;
  FinAbGroup target_;
  IntMatrix matrix_;
};

/// Materializes the map induced on subquotients by an ambient-level rule, by pushing each
/// canonical generator representative of `source` through `rule`.
GroupHom induced_hom(const Subquotient& source, const Subquotient& target,
                     const std::function<IntVector(const IntVector&)>& rule);

}  // namespace torusdual
