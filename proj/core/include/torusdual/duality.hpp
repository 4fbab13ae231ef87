#pragma once

#include "torusdual/cup.hpp"
#include "torusdual/fixtures.hpp"
#include "torusdual/maps.hpp"
#include "torusdual/weil.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torusdual {

/// Hom_G(L, C), realized as the invariants of C (x) Lhat = H_1(C, Lhat).
Subquotient hom_g_l_c(const TorusFixture& fix);

/// Everything the duality checks share for one fixture. Requires the Tate-Nakayama hypotheses.
class DualityContext {
 public:
  /// Throws HypothesisFailure when the class formation check fails.
  explicit DualityContext(const TorusFixture& fix);

  const TorusFixture& fixture() const { return fix_; }
  const GModule& lattice_dual() const { return lhat_; }
  const WeilHomology& homology() const { return *homology_; }
  const WeilCocycles& cocycles() const { return *cocycles_; }
  const FundamentalClassData& fundamental_class() const { return data_; }
  const Subquotient& hom_g_l_c() const { return homology_->h1_c_invariants(); }
  const GroupHom& transfer() const { return transfer_; }

  /// Fox 1-cycles x_k with Tr_1[x_k] equal to the k-th generator of Hom_G(L, C).
  const std::vector<IntVector>& transfer_lifts() const { return lifts_; }

  /// Psi([f]) on the generators of Hom_G(L, C): phi_k -> <f, x_k>. f is given on presentation generators.
  QVector psi(const QVector& f) const;

 private:
  const TorusFixture& fix_;
  GModule lhat_;
  FundamentalClassData data_;
  std::unique_ptr<WeilHomology> homology_;
  std::unique_ptr<WeilCocycles> cocycles_;
  GroupHom transfer_;
  std::vector<IntVector> lifts_;
};

struct SliceCheck {
  Integer d;
  FinAbGroup classes;  // H^1(W, T)[d]
  FinAbGroup duals;    // Hom(Hom_G(L, C), Q/Z)[d]
  IntMatrix psi;       // images of class generators, in coordinates of `duals`
  bool bijective = false;
};

struct Theorem1Report {
  FinAbGroup h1_w;     // H_1(W, Lhat)
  FinAbGroup hom_glc;  // Hom_G(L, C)
  bool free_ranks_equal = false;
  bool transfer_bijective = false;
  bool additive = false;
  bool kills_coboundaries = false;
  std::vector<SliceCheck> slices;
  std::optional<std::string> failure;
  bool pass() const { return !failure; }
};

/// Psi is additive, kills coboundaries, and is a bijection on d-torsion for d = 1..max_d.
Theorem1Report verify_theorem1(const DualityContext& ctx, long max_d = 12, unsigned seed = 1);

struct DiagramReport {
  FiveTermReport top_row;
  bool transfer_after_corestriction_is_norm = false;
  bool cup_square_commutes = false;
  bool cup_is_isomorphism = false;
  bool bottom_row_exact = false;
  std::optional<std::string> failure;
  bool pass() const { return !failure; }
};

/// H_1(C) -> H_1(W) -> H_1(G) -> 0 over H_1(C) -> H_1(C)^G -> hat-H^0(G, C (x) Lhat) -> 0,
/// with vertical maps identity, Tr_1, and cup with the fundamental class.
DiagramReport verify_diagram_A(const DualityContext& ctx);

struct KernelReport {
  Lattice corestriction_kernel;
  Lattice norm_kernel;
  std::optional<std::string> failure;
  bool pass() const { return !failure; }
};

/// ker(Cor: H_1(C, Lhat) -> H_1(W, Lhat)) equals ker(N_G) as subgroups.
KernelReport kernel_characterization(const DualityContext& ctx);

struct ExtensionReport {
  bool invariant = false;
  /// Degree-2 UCT evaluations of psi_*[u] on the generators of H_2(G, Lhat); empty when not invariant.
  QVector obstruction;
  bool obstruction_zero = false;
  /// Values on presentation generators of a cocycle f on W restricting to psi on C, when one exists.
  std::optional<QVector> extension;
  std::optional<std::string> diagnostic;
};

/// psi : C -> T = Hom(Lhat, Q/Z), given by psi(e_i)_j at index i * rank(Lhat) + j (the same layout as
/// a homomorphism C (x) Lhat -> Q/Z). Decides whether psi extends to a 1-cocycle on W.
ExtensionReport extension_obstruction(const TorusFixture& fix, const QVector& psi);

}  // namespace torusdual
