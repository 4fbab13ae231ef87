#pragma once

#include "torusdual/chains.hpp"
#include "torusdual/gmodule.hpp"
#include "torusdual/homology.hpp"
#include "torusdual/intlin.hpp"
#include "torusdual/weil.hpp"

#include <memory>
#include <optional>
#include <string>

namespace torusdual {

/// A homomorphism between computed groups, with the chain-level rule that produced it.
struct InducedMap {
  std::string source;
  std::string target;
  std::string rule;
  GroupHom map;
};

/// Throws ContractViolation unless x is a 1-cycle; `image[w]` is the element of a's group that w acts through.
void require_one_cycle(const GModule& a, const std::vector<Element>& image, const Chain& x);

// Chain-level rules on bar 1-chains.

/// Extension by zero from a subgroup (x indexed by subgroup elements) to the whole group.
Chain corestriction_h1(const GModule& a, const Subgroup& sub, const Chain& x);
/// y(g) = sum over a in C of x(a w_g); x is a chain on the finite group W, a a G-module.
Chain coinflation_h1(const ExtensionGroup& w, const GModule& a, const Chain& x);
/// (Tr x)(c) = sum over u(w_g, w) = c of g x(w); the result is indexed by the kernel subgroup of W.
Chain transfer_h1(const ExtensionGroup& w, const GModule& a, const Chain& x);
/// sum_c c (x) y(c) in C (x) A, for a 1-chain y on the kernel subgroup of a finite W.
IntVector kernel_hurewicz(const ExtensionGroup& w, const GModule& a, const Chain& y);

/// Sum over right coset representatives K g_i of g_i v: the degree-0 transfer A_H -> A_K.
IntVector transfer_h0(const GModule& a, const Subgroup& k, const IntVector& v);
/// sum_w (w^{-1} - 1) (x) w^{-1} z(w) in I_H (x) A, for a 1-cycle z on the subgroup k of H = a.group().
/// Coordinates follow tensor(augmentation_ideal(H), a).
IntVector dim_shift_delta(const GModule& a, const Subgroup& k, const Chain& z);
IntVector dim_shift_delta(const GModule& a, const Chain& z);

/// First homology of W, C and G with coefficients in a free G-module, plus the maps between them.
/// H_1(C, M) is identified with C (x) M (coordinates of tensor(C, M)) since C acts trivially on M.
class WeilHomology {
 public:
  WeilHomology(const ExtensionGroup& w, GModule m);

  const ExtensionGroup& extension() const { return w_; }
  const GModule& module() const { return m_; }
  const GModule& kernel_coefficients() const { return cm_; }
  const Presentation& presentation() const { return p_; }
  const FoxComplex& fox() const { return fox_; }
  const BarComplex& base() const { return *base_; }

  const Subquotient& h1_w() const { return fox_.h1; }
  const Subquotient& h1_c() const { return h1_c_; }
  const Subquotient& h1_c_invariants() const { return h1_c_inv_; }
  const Subquotient& h1_g() const { return base_->homology(1).quotient; }

  // Fox-level rules.
  IntVector corestriction_rule(const IntVector& cm) const;
  Chain coinflation_rule(const IntVector& fox_chain) const;
  IntVector transfer_rule(const IntVector& fox_chain) const;

  InducedMap corestriction() const;
  InducedMap coinflation() const;
  InducedMap transfer() const;
  /// Tr_1 into the invariant subgroup.
  InducedMap transfer_to_invariants() const;
  InducedMap norm() const;

 private:
  const ExtensionGroup& w_;
  GModule m_;
  GModule cm_;
  Presentation p_;
  FoxComplex fox_;
  std::unique_ptr<BarComplex> base_;
  Subquotient h1_c_;
  Subquotient h1_c_inv_;
};

struct FiveTermReport {
  bool corestriction_image_is_kernel = false;
  bool coinflation_surjective = false;
  /// Description of the first offending generator, when a check fails.
  std::optional<std::string> witness;
  bool exact() const { return corestriction_image_is_kernel && coinflation_surjective; }
};

/// H_1(C, M) -> H_1(W, M) -> H_1(G, M) -> 0.
FiveTermReport five_term_check(const WeilHomology& h);

}  // namespace torusdual
