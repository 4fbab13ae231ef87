#include "torusdual/fixtures.hpp"

#include "torusdual/errors.hpp"

namespace torusdual {

namespace {

GroupPtr cyclic_ptr(std::size_t n) { return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n)); }

TorusFixture valuation_fixture(std::string name, std::string description, GModule l) {
  const std::size_t n = l.group().order();
  ExtensionGroup w(GModule::trivial_free(l.group_ptr(), 1), carry_cocycle(n));
  return {std::move(name), std::move(description), std::move(l), std::move(w), true};
}

bool is_odd(const Permutation& p) {
  std::size_t swaps = 0;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    swaps += len - 1;
  }
  return swaps % 2 == 1;
}

}  // namespace

std::vector<std::pair<std::string, GModule>> TorusFixture::modules() const {
  GModule lhat = lattice_dual();
  return {{"L", lattice},
          {"Lhat", lhat},
          {"C", formation_module()},
          {"CxLhat", tensor(formation_module(), lhat)}};
}

std::vector<std::string> builtin_fixture_names() {
  return {"c2-norm1", "c2-res", "c2-split", "c3", "s3-finite", "z8"};
}

TorusFixture builtin_fixture(const std::string& name) {
  if (name == "c2-split")
    return valuation_fixture(name, "split torus over a quadratic unramified model", GModule::trivial_free(cyclic_ptr(2), 1));
  if (name == "c2-norm1")
    return valuation_fixture(name, "norm-one torus of a quadratic unramified model",
                             GModule::from_generators(cyclic_ptr(2), {0}, {{1, IntMatrix::from_rows({{-1}})}}));
  if (name == "c2-res")
    return valuation_fixture(name, "Weil restriction of the multiplicative group, quadratic model",
                             GModule::from_generators(cyclic_ptr(2), {0, 0}, {{1, IntMatrix::from_rows({{0, 1}, {1, 0}})}}));
  if (name == "c3")
    return valuation_fixture(name, "rank-two torus with an order-three action, cubic model",
                             GModule::from_generators(cyclic_ptr(3), {0, 0}, {{1, IntMatrix::from_rows({{0, -1}, {1, -1}})}}));
  if (name == "z8") {
    GroupPtr g = cyclic_ptr(2);
    Cochain u(2, 2, 1);
    u.set({1, 1}, {1});
    ExtensionGroup w(GModule::trivial(g, {4}), std::move(u));
    return {name, "cyclic extension of Z/2 by Z/4 (not a class formation)", GModule::trivial_free(g, 1), std::move(w),
            false};
  }
  if (name == "s3-finite") {
    auto g = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric3());
    auto gens = g->generators();
    GModule l = GModule::from_generators(g, {0, 0},
                                         {{gens[0], IntMatrix::from_rows({{-1, 1}, {0, 1}})},
                                          {gens[1], IntMatrix::from_rows({{1, 0}, {1, -1}})}});
    Cochain u(g->order(), 2, 1);
    for (Element a = 0; a < g->order(); ++a)
      for (Element b = 0; b < g->order(); ++b)
        if (is_odd(g->permutations()[a]) && is_odd(g->permutations()[b])) u.set({a, b}, {1});
    ExtensionGroup w(GModule::trivial(g, {2}), std::move(u));
    return {name, "root lattice of S3 with a finite sign-type extension", std::move(l), std::move(w), false};
  }
  std::string known;
  for (const auto& n : builtin_fixture_names()) known += (known.empty() ? "" : ", ") + n;
  throw ContractViolation("unknown fixture '" + name + "' (available: " + known + ")");
}

}  // namespace torusdual
