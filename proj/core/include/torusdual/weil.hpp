#pragma once

#include "torusdual/chains.hpp"
#include "torusdual/gmodule.hpp"
#include "torusdual/group.hpp"
#include "torusdual/homology.hpp"
#include "torusdual/intlin.hpp"
#include "torusdual/qmodz.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace torusdual {

/// Extension 0 -> C -> W -> G -> 1 built from a normalized 2-cocycle u on G with values in C.
/// Elements are pairs (c, g) with (a, g)(b, h) = (a + g b + u(g, h), g h); coset representatives w_g = (0, g).
class ExtensionGroup {
 public:
  struct Elem {
    IntVector c;
    Element g = 0;
    friend bool operator==(const Elem& x, const Elem& y) { return x.g == y.g && x.c == y.c; }
    friend bool operator<(const Elem& x, const Elem& y) { return x.g != y.g ? x.g < y.g : x.c < y.c; }
  };

  /// Throws ContractViolation (naming a witness triple) unless u is a normalized cocycle.
  ExtensionGroup(GModule c, Cochain cocycle);

  const FiniteGroup& quotient_group() const { return c_.group(); }
  const GroupPtr& quotient_ptr() const { return c_.group_ptr(); }
  const GModule& kernel_module() const { return c_; }
  const Cochain& cocycle() const { return u_; }
  IntVector u_bar(Element g, Element h) const { return u_.value({g, h}); }
  bool is_finite() const { return c_.free_rank() == 0; }
  /// |W|, or 0 when infinite.
  Integer order() const;

  Elem identity() const { return {IntVector(c_.rank()), 0}; }
  Elem coset_rep(Element g) const { return {IntVector(c_.rank()), g}; }
  Elem from_kernel(const IntVector& a) const { return {c_.reduce(a), 0}; }
  Elem mul(const Elem& x, const Elem& y) const;
  Elem inv(const Elem& x) const;
  Elem power(const Elem& x, long k) const;
  /// u(w_g, w) with w_g w = u(w_g, w) w_{j(g)}.
  IntVector decomposition(Element g, const Elem& w) const;
  Element permutation(Element g, const Elem& w) const { return quotient_group().mul(g, w.g); }

  /// Finite W only: the elements in a fixed order (identity first) and the group they form.
  const std::vector<Elem>& elements() const;
  std::size_t index_of(const Elem& w) const;
  GroupPtr as_finite_group() const;
  /// Projection W -> G on element indices of as_finite_group().
  std::vector<Element> projection() const;
  /// The normal subgroup C, as a subgroup of as_finite_group().
  Subgroup kernel_subgroup() const;

 private:
  void enumerate() const;

  GModule c_;
  Cochain u_;
  mutable std::vector<Elem> elements_;
  mutable std::map<Elem, std::size_t> index_;
  mutable GroupPtr finite_;
};

/// G = Z/n, C = Z with trivial action, u(g^i, g^j) = 1 if i + j >= n else 0.
ExtensionGroup valuation_model(std::size_t n);
Cochain carry_cocycle(std::size_t n);

/// Finite presentation of W: generators c_i (basis of C) and t_g (g != e);
/// relators for C itself, conjugation t_g c_i t_g^{-1} = g.c_i, and products t_g t_h = u(g, h) t_{gh}.
struct Presentation {
  struct Generator {
    enum class Kind { kernel, coset } kind;
    std::size_t index;  // basis index for kernel generators, group element for coset generators
    std::string label;
  };
  struct Letter {
    std::size_t generator;
    long exponent;
  };
  struct Relator {
    std::vector<Letter> letters;
    std::string label;
  };

  std::vector<Generator> generators;
  std::vector<Relator> relators;
  /// fox[r][s] is the Fox derivative of relator r along generator s, projected to Z[G].
  std::vector<std::vector<IntVector>> fox;
  /// Image of each generator in G.
  std::vector<Element> image;

  std::size_t kernel_generator(std::size_t i) const { return i; }
  std::size_t coset_generator(Element g) const;
};

Presentation presentation(const ExtensionGroup& w);
/// Evaluates a word in W.
ExtensionGroup::Elem evaluate_word(const ExtensionGroup& w, const Presentation& p, const std::vector<Presentation::Letter>& word);

/// Chain complex M^R -> M^S -> M of the presentation 2-complex with coefficients in a G-module M
/// (W acting through G). d1(m e_s) = s^{-1} m - m; the (s, r) block of d2 is sum_v (dr/ds)_v v^{-1}.
struct FoxComplex {
  GModule module;
  std::size_t generators = 0;
  std::size_t relators = 0;
  IntMatrix d1;
  IntMatrix d2;
  IntVector moduli0;
  IntVector moduli1;
  IntVector moduli2;
  Subquotient h1;

  std::size_t rank() const { return module.rank(); }
  /// Coordinate of the j-th module coordinate at generator s.
  std::size_t position(std::size_t s, std::size_t j) const { return s * rank() + j; }
};

/// H_1(W, M) computed from the presentation. Throws UnsupportedModel when M is not a module over G.
FoxComplex h1_weil(const ExtensionGroup& w, const Presentation& p, const GModule& m);

/// Finite W only: the Fox 1-chain e_s ↦ the bar 1-chain supported at the element s.
Chain fox_to_bar(const ExtensionGroup& w, const Presentation& p, const FoxComplex& fc, const IntVector& x);
/// Finite W only: m [(a, g)] ↦ sum_i a_i m e_{c_i} + m e_{t_g}.
IntVector bar_to_fox(const ExtensionGroup& w, const Presentation& p, const FoxComplex& fc, const Chain& x);

/// 1-cocycles W -> T = Hom(Lhat, Q/Z), given by values on presentation generators
/// (generator-major, one functional coordinate per coordinate of Lhat).
/// The action on T is (g phi)(x) = phi(g^{-1} x).
class WeilCocycles {
 public:
  /// fc must be the Fox complex of a free module Lhat.
  explicit WeilCocycles(const FoxComplex& fc);

  std::size_t dim() const { return fc_.d2.rows(); }
  /// Label of the first relator violated by the given values, if any.
  std::optional<std::size_t> failing_relator(const QVector& values) const;
  bool is_cocycle(const QVector& values) const { return !failing_relator(values); }
  QVector coboundary(const QVector& t) const;
  bool is_coboundary(const QVector& values) const;
  /// The d-torsion subgroup of H^1(W, T).
  DualSlice slice(const Integer& d) const { return DualSlice(fc_.d2, fc_.d1, d); }
  const FoxComplex& complex() const { return fc_; }

 private:
  const FoxComplex& fc_;
};

/// phi = f x sigma: a 1-cocycle on W with values in T together with the projection to G.
struct AdmissibleHom {
  const ExtensionGroup* w = nullptr;
  const Presentation* p = nullptr;
  const GModule* lhat = nullptr;
  QVector values;

  /// f(w) for a normal-form element, via w = c^a t_g.
  QVector evaluate(const ExtensionGroup::Elem& x) const;
  /// g acting on T.
  QVector act(Element g, const QVector& phi) const;
  /// Checks f(x y) = f(x) + x f(y).
  bool satisfies_cocycle(const ExtensionGroup::Elem& x, const ExtensionGroup::Elem& y) const;
};

/// True iff f1 - f2 is a coboundary.
bool admissible_equivalent(const WeilCocycles& z, const AdmissibleHom& a, const AdmissibleHom& b);

}  // namespace torusdual
