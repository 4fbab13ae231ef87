#pragma once

#include "torusdual/chains.hpp"
#include "torusdual/gmodule.hpp"
#include "torusdual/homology.hpp"
#include "torusdual/maps.hpp"
#include "torusdual/weil.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torusdual {

// Chain-level cup products in the degrees used by the duality argument. Each returns an ambient
// representative in the tensor product module; classify it with BarComplex::tate_class.

/// -sum_g g a (x) r(g) in A (x) B, for N a = 0 and a 1-cocycle r with values in B. Lands in degree 0.
IntVector cup_m1_1(const GModule& a_mod, const GModule& b_mod, const IntVector& a, const Cochain& r);
/// -sum_g x(g) (x) f(g) in B (x) A, for a 1-cycle x in B and a 1-cocycle f in A. Lands in degree -1.
IntVector cup_m2_1(const GModule& b_mod, const GModule& a_mod, const Chain& x, const Cochain& f);
/// sum_{g,h} f(g, h) (x) g x(h) in B (x) A, for a 2-cocycle f in B and a 1-cycle x in A. Lands in degree 0.
IntVector cup_2_m2(const GModule& b_mod, const GModule& a_mod, const Cochain& f, const Chain& x);
/// The 1-cocycle g -> sum_k k a (x) k u(k^{-1}, g) in A (x) C, for N a = 0 and a 2-cocycle u.
Cochain cup_m1_2(const GModule& a_mod, const GModule& c_mod, const IntVector& a, const Cochain& u);

/// a (x) b in A (x) B  ->  b (x) a in B (x) A.
IntVector swap_tensor(std::size_t rank_a, std::size_t rank_b, const IntVector& v);

/// A normalized 2-cocycle u with values in a G-module C, the candidate fundamental class.
struct FundamentalClassData {
  GModule c;
  Cochain u;

  /// Throws ContractViolation with a witness triple unless u is a normalized cocycle.
  FundamentalClassData(GModule c, Cochain u);
  static FundamentalClassData from(const ExtensionGroup& w) { return {w.kernel_module(), w.cocycle()}; }
  const FiniteGroup& group() const { return c.group(); }
};

struct SubgroupCheck {
  std::vector<Element> subgroup;
  FinAbGroup h1;
  FinAbGroup h2;
  /// Order of the restricted class in H^2(H, C).
  Integer restriction_order;
  bool pass = false;
  std::string witness;
};

struct ClassFormationReport {
  std::vector<SubgroupCheck> subgroups;
  bool pass() const;
  /// First failing subgroup, if any.
  const SubgroupCheck* failure() const;
};

/// For every subgroup H: H^1(H, C) = 0 and H^2(H, C) cyclic of order |H| generated by the restriction of [u].
/// Supported for finite C and for free C with trivial action over a cyclic group.
ClassFormationReport class_formation_check(const FundamentalClassData& data);

/// Cup with [u]: hat-H^i(G, A) -> hat-H^{i+2}(G, A (x) C) for i in {-2, -1}. No hypothesis check.
InducedMap cup_with_fundamental_class(const FundamentalClassData& data, const GModule& a, int i);
/// As above, refusing with HypothesisFailure (naming the subgroup) unless class_formation_check passes.
InducedMap tate_nakayama_iso(const FundamentalClassData& data, const GModule& a, int i);

}  // namespace torusdual
