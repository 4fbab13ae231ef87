#pragma once

#include "torusdual/gmodule.hpp"
#include "torusdual/weil.hpp"

#include <string>
#include <utility>
#include <vector>

namespace torusdual {

/// A torus given by its character lattice L over G, together with a class-formation model (C, u)
/// and the Weil-type extension W it defines.
struct TorusFixture {
  std::string name;
  std::string description;
  GModule lattice;
  ExtensionGroup weil;
  /// Whether the model is expected to satisfy the Tate-Nakayama hypotheses.
  bool formation = true;

  const FiniteGroup& group() const { return lattice.group(); }
  const GroupPtr& group_ptr() const { return lattice.group_ptr(); }
  const GModule& formation_module() const { return weil.kernel_module(); }
  GModule lattice_dual() const { return dual_lattice(lattice); }
  /// Named modules for tabulation: L, Lhat, C, C(x)Lhat.
  std::vector<std::pair<std::string, GModule>> modules() const;
};

std::vector<std::string> builtin_fixture_names();
/// Throws ContractViolation naming the available fixtures when `name` is unknown.
TorusFixture builtin_fixture(const std::string& name);

}  // namespace torusdual
