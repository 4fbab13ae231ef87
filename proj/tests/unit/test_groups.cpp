#include "doctest.h"
#include "torusdual/errors.hpp"
#include "torusdual/gmodule.hpp"
#include "torusdual/group.hpp"

#include <memory>

using namespace torusdual;

namespace {

GroupPtr c2() { return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2)); }

}  // namespace

TEST_CASE("group construction and verification") {
  FiniteGroup g = FiniteGroup::cyclic(4);
  CHECK(g.order() == 4);
  CHECK(g.element_order(1) == 4);
  CHECK(g.inv(1) == 3);
  CHECK(g.power(1, -1) == 3);
  CHECK(g.is_cyclic());
  FiniteGroup s3 = FiniteGroup::symmetric3();
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(s3.label(0) == "()");
  CHECK(s3.generators().size() == 2);
  // Not associative: a Latin square that is not a group.
  std::vector<std::vector<Element>> bad{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup{bad}, ContractViolation);
  CHECK_THROWS_AS(FiniteGroup(std::vector<std::vector<Element>>{{1, 0}, {0, 1}}), ContractViolation);
}

TEST_CASE("subgroup enumeration") {
  CHECK(subgroups(FiniteGroup::cyclic(2)).size() == 2);
  auto c4 = subgroups(FiniteGroup::cyclic(4));
  REQUIRE(c4.size() == 3);
  CHECK(c4[0].order() == 1);
  CHECK(c4[1].order() == 2);
  CHECK(c4[2].order() == 4);
  auto s3 = subgroups(FiniteGroup::symmetric3());
  REQUIRE(s3.size() == 6);
  std::vector<std::size_t> orders;
  for (const auto& h : s3) orders.push_back(h.order());
  CHECK(orders == std::vector<std::size_t>{1, 2, 2, 2, 3, 6});
  // (Z/2)^4 needs four generators.
  FiniteGroup v16 = FiniteGroup::from_permutations(
      {{1, 0, 2, 3, 4, 5, 6, 7}, {0, 1, 3, 2, 4, 5, 6, 7}, {0, 1, 2, 3, 5, 4, 6, 7}, {0, 1, 2, 3, 4, 5, 7, 6}});
  CHECK(subgroups(v16).size() == 67);
  CHECK(subgroups(FiniteGroup::cyclic(12)).size() == 6);
  CHECK_THROWS_AS(subgroups(FiniteGroup::cyclic(30)), SizeLimitExceeded);
  // Embedded tables are groups in their own right, closed under the parent law.
  for (const auto& h : s3)
    for (std::size_t a = 0; a < h.order(); ++a)
      for (std::size_t b = 0; b < h.order(); ++b)
        CHECK(h.embedding[h.group->mul(a, b)] == FiniteGroup::symmetric3().mul(h.embedding[a], h.embedding[b]));
}

TEST_CASE("cosets and normality") {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  auto subs = subgroups(s3);
  CHECK(is_normal(s3, subs[4]));
  CHECK_FALSE(is_normal(s3, subs[1]));
  CHECK(right_coset_representatives(s3, subs[4]).size() == 2);
  CHECK(right_coset_representatives(s3, subs[1]).size() == 3);
  CHECK(right_coset_representatives(s3, subs[1])[0] == 0);
}

TEST_CASE("module construction checks") {
  auto g = c2();
  CHECK_NOTHROW(GModule(g, {0}, {IntMatrix::identity(1), IntMatrix::from_rows({{-1}})}));
  CHECK_THROWS_AS(GModule(g, {0}, {IntMatrix::identity(1), IntMatrix::from_rows({{2}})}), ContractViolation);
  // Sending the Z/2 generator to an element of order 4 is not well defined.
  CHECK_THROWS_AS(GModule(g, {2, 4}, {IntMatrix::identity(2), IntMatrix::from_rows({{1, 0}, {1, 1}})}),
                  ContractViolation);
  CHECK_NOTHROW(GModule(g, {4, 2}, {IntMatrix::identity(2), IntMatrix::from_rows({{1, 2}, {0, 1}})}));
  auto swap = GModule::from_generators(std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2)), {0, 0},
                                       {{1, IntMatrix::from_rows({{0, 1}, {1, 0}})}});
  CHECK(swap.action(1) == IntMatrix::from_rows({{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(GModule::from_generators(std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(3)), {0},
                                           {{1, IntMatrix::from_rows({{-1}})}}),
                  ContractViolation);
}

TEST_CASE("dual lattice") {
  auto g = c2();
  auto triv = GModule::trivial_free(g, 1);
  CHECK(dual_lattice(triv) == triv);
  GModule sign(g, {0}, {IntMatrix::identity(1), IntMatrix::from_rows({{-1}})});
  CHECK(dual_lattice(sign) == sign);
  GModule swap(g, {0, 0}, {IntMatrix::identity(2), IntMatrix::from_rows({{0, 1}, {1, 0}})});
  CHECK(dual_lattice(swap) == swap);
  CHECK_THROWS_AS(dual_lattice(GModule::trivial(g, {2})), DomainError);
  auto c3 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(3));
  auto rot = GModule::from_generators(c3, {0, 0}, {{1, IntMatrix::from_rows({{0, -1}, {1, -1}})}});
  CHECK(dual_lattice(dual_lattice(rot)) == rot);
  CHECK(dual_lattice(rot).action(1) == rot.action(2).transpose());
}

TEST_CASE("tensor products") {
  auto g = c2();
  auto z = GModule::trivial_free(g, 1);
  CHECK(tensor(z, z).carrier().to_string() == "Z");
  CHECK(tensor(GModule::trivial(g, {2}), GModule::trivial(g, {4})).carrier().to_string() == "Z/2");
  GModule swap(g, {0, 0}, {IntMatrix::identity(2), IntMatrix::from_rows({{0, 1}, {1, 0}})});
  CHECK(tensor(swap, z) == swap);
  GModule sign(g, {0}, {IntMatrix::identity(1), IntMatrix::from_rows({{-1}})});
  CHECK(tensor(sign, sign).has_trivial_action());
  // Associativity on shapes.
  auto a = tensor(tensor(swap, sign), GModule::trivial(g, {6}));
  auto b = tensor(swap, tensor(sign, GModule::trivial(g, {6})));
  CHECK(a == b);
}

TEST_CASE("invariants, coinvariants and the norm") {
  auto g = c2();
  GModule triv = GModule::trivial_free(g, 1);
  GModule sign(g, {0}, {IntMatrix::identity(1), IntMatrix::from_rows({{-1}})});
  GModule swap(g, {0, 0}, {IntMatrix::identity(2), IntMatrix::from_rows({{0, 1}, {1, 0}})});

  CHECK(invariants(triv).group().to_string() == "Z");
  CHECK(invariants(sign).group().to_string() == "0");
  Subquotient sw = invariants(swap);
  CHECK(sw.group().to_string() == "Z");
  CHECK(sw.contains({1, 1}));
  CHECK_FALSE(sw.contains({1, 0}));

  CHECK(coinvariants(triv).group().to_string() == "Z");
  CHECK(coinvariants(sign).group().to_string() == "Z/2");
  CHECK(coinvariants(swap).group().to_string() == "Z");

  CHECK(triv.norm_matrix() == IntMatrix::from_rows({{2}}));
  CHECK(sign.norm_matrix().is_zero());
  CHECK(swap.norm_matrix() == IntMatrix::from_rows({{1, 1}, {1, 1}}));
  CHECK(norm_hom(sign).is_zero());
  CHECK(norm_hom(swap).is_surjective());
  CHECK_FALSE(norm_hom(triv).is_surjective());
}

TEST_CASE("norm image lies in the invariants and |G| kills Hat-H^0") {
  auto s3 = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric3());
  auto l = GModule::from_generators(s3, {0, 0},
                                    {{s3->generators()[0], IntMatrix::from_rows({{-1, 1}, {0, 1}})},
                                     {s3->generators()[1], IntMatrix::from_rows({{1, 0}, {1, -1}})}});
  for (const GModule& m : {l, dual_lattice(l), tensor(l, GModule::trivial(s3, {4})), augmentation_ideal(s3)}) {
    Subquotient inv = invariants(m);
    IntMatrix n = m.norm_matrix();
    for (std::size_t j = 0; j < m.rank(); ++j) CHECK(inv.contains(n.column(j)));
    for (std::size_t k = 0; k < inv.group().num_coordinates(); ++k) {
      IntVector x = scale(Integer(6), inv.representative(k));
      auto y = solve(n, x, m.moduli());
      CHECK(y.has_value());
    }
  }
}

TEST_CASE("augmentation ideal and restriction") {
  auto c3 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(3));
  GModule i = augmentation_ideal(c3);
  CHECK(i.rank() == 2);
  CHECK(invariants(i).group().to_string() == "0");
  CHECK(coinvariants(i).group().to_string() == "Z/3");
  auto s3 = FiniteGroup::symmetric3();
  auto subs = subgroups(s3);
  auto big = std::make_shared<const FiniteGroup>(s3);
  GModule aug = augmentation_ideal(big);
  GModule r = restrict_to(aug, subs[1]);
  CHECK(r.group().order() == 2);
  CHECK(r.rank() == 5);
}
