#pragma once

#include "torusdual/chains.hpp"
#include "torusdual/gmodule.hpp"
#include "torusdual/intlin.hpp"
#include "torusdual/qmodz.hpp"

#include <cstddef>
#include <map>
#include <optional>

namespace torusdual {

/// One (co)homology or Tate group, as a subquotient of the ambient coordinate space it is computed in:
/// normalized chain/cochain coordinates for bar degrees, module coordinates for Tate degrees 0 and -1.
struct ClassGroup {
  enum class Kind { homology, cohomology, tate_zero, tate_minus_one };
  Kind kind = Kind::homology;
  int degree = 0;
  Subquotient quotient;

  const FinAbGroup& group() const { return quotient.group(); }
};

/// Normalized bar complex of a finite group with coefficients in a G-module.
///
/// Boundary:   d(a[g1|...|gn]) = g1^{-1} a [g2|...|gn] + sum_i (-1)^i a[...|g_i g_{i+1}|...] + (-1)^n a[g1|...|g_{n-1}]
/// Coboundary: (df)(g1,...,g_{n+1}) = g1 f(g2,...) + sum_i (-1)^i f(...,g_i g_{i+1},...) + (-1)^{n+1} f(g1,...,g_n)
///
/// Normalized coordinates index tuples of non-identity elements, digit g - 1, big-endian, times the module rank.
/// Matrices are built lazily and cached; an instance is not safe for concurrent use.
class BarComplex {
 public:
  static constexpr std::size_t default_entry_bound = std::size_t{1} << 23;
  static constexpr std::size_t default_max_degree = 3;

  explicit BarComplex(GModule module, std::size_t max_degree = default_max_degree,
                      std::size_t entry_bound = default_entry_bound);

  const GModule& module() const { return module_; }
  const FiniteGroup& group() const { return module_.group(); }
  std::size_t max_degree() const { return max_degree_; }

  /// Rank of the normalized degree-k chain (or cochain) group.
  std::size_t dim(std::size_t k) const;
  /// Per-coordinate moduli in degree k.
  IntVector moduli(std::size_t k) const;
  IntMatrix relations(std::size_t k) const;

  /// d_k : C_k -> C_{k-1}, k >= 1.
  const IntMatrix& boundary(std::size_t k) const;
  /// d^k : C^k -> C^{k+1}, k >= 0.
  const IntMatrix& coboundary(std::size_t k) const;

  IntVector flatten(const Chain& x) const;
  Chain chain(const IntVector& v, std::size_t k) const;
  /// Requires a normalized cochain (zero on tuples containing the identity).
  IntVector flatten(const Cochain& f) const;
  Cochain cochain(const IntVector& v, std::size_t k) const;
  /// Normalized Q/Z-valued cochains, for coefficients Hom(B, Q/Z).
  QVector flatten(const QCochain& f) const;
  QCochain qcochain(const QVector& v, std::size_t k) const;

  const ClassGroup& homology(std::size_t k) const;
  const ClassGroup& cohomology(std::size_t k) const;
  /// Hat-H^i: cohomology for i >= 1, H_{-i-1} for i <= -2, norm/augmentation quotients for 0 and -1.
  const ClassGroup& tate(int i) const;

  bool is_cycle(const Chain& x) const;
  bool is_cocycle(const Cochain& f) const;
  /// Canonical coordinates; throws ContractViolation when x is not a cycle.
  IntVector homology_class(const Chain& x) const;
  IntVector cohomology_class(const Cochain& f) const;
  /// Class of a module element in Tate degree 0 or -1, or of a flattened (co)chain in other degrees.
  IntVector tate_class(int i, const IntVector& ambient) const;
  Chain homology_representative(std::size_t k, std::size_t generator) const;
  Cochain cohomology_representative(std::size_t k, std::size_t generator) const;

  /// A primitive of the cocycle f, if f is a coboundary.
  std::optional<Cochain> is_coboundary(const Cochain& f) const;

 private:
  void check_size(std::size_t rows, std::size_t cols, std::size_t degree) const;
  std::size_t normalized_index(const Tuple& t) const;

  GModule module_;
  std::size_t max_degree_;
  std::size_t entry_bound_;
  mutable std::map<std::size_t, IntMatrix> boundary_;
  mutable std::map<std::size_t, IntMatrix> coboundary_;
  mutable std::map<std::size_t, ClassGroup> homology_;
  mutable std::map<std::size_t, ClassGroup> cohomology_;
  mutable std::map<int, ClassGroup> tate_;
};

/// H^n(C^*, Q/Z)[d] for a cochain complex dual to a chain complex C_{n+1} -> C_n -> C_{n-1}:
/// cocycles x/d with x^T d_in = 0 mod d, modulo d-torsion coboundaries t^T d_out.
/// Coordinates are integers x with the cochain x/d.
class DualSlice {
 public:
  DualSlice(const IntMatrix& d_in, const IntMatrix& d_out, const Integer& d);

  const Integer& d() const { return d_; }
  const Subquotient& quotient() const { return quotient_; }
  const FinAbGroup& group() const { return quotient_.group(); }
  const Lattice& coboundaries() const { return coboundaries_; }

  QVector cochain(const IntVector& coords) const;
  /// Throws ContractViolation unless f is a d-torsion cocycle.
  IntVector coordinates(const QVector& f) const;
  bool is_coboundary(const QVector& f) const;

 private:
  Integer d_;
  Lattice coboundaries_;
  Subquotient quotient_;
};

/// Sum over the support of x of f(tuple)(x(tuple)).
QmodZ uct_pairing(const QCochain& f, const Chain& x);

/// H^n(G, Hom(B, Q/Z)) ~ Hom(H_n(G, B), Q/Z) for a free module B and n >= 1.
/// Hom(B, Q/Z) carries the action (g phi)(b) = phi(g^{-1} b); its cochains pair with chains of B.
class UniversalCoefficients {
 public:
  UniversalCoefficients(const BarComplex& complex, std::size_t n);

  const ClassGroup& homology() const { return complex_.homology(n_); }
  bool is_cocycle(const QCochain& f) const;
  /// Values of [f] on the canonical generators of H_n(G, B).
  QVector evaluate(const QCochain& f) const;
  /// A cocycle realizing the given values on the generators.
  QCochain lift(const QVector& values) const;
  /// The d-torsion subgroup of H^n(G, Hom(B, Q/Z)).
  DualSlice slice(const Integer& d) const;

 private:
  const BarComplex& complex_;
  std::size_t n_;
};

}  // namespace torusdual
