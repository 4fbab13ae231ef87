#include "doctest.h"
#include "torusdual/cup.hpp"
#include "torusdual/errors.hpp"
#include "torusdual/fixtures.hpp"

#include <random>

using namespace torusdual;

namespace {

GroupPtr cyclic(std::size_t n) { return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n)); }

GModule sign(std::size_t n) { return GModule::from_generators(cyclic(n), {0}, {{1, IntMatrix::from_rows({{-1}})}}); }

Cochain coboundary_of_element(const GModule& m, const IntVector& b) {
  Cochain r(m.group().order(), 1, m.rank());
  for (Element g = 0; g < m.group().order(); ++g) r.set({g}, m.reduce(subtract(m.act(g, b), b)));
  return r;
}

IntVector random_vector(std::mt19937_64& rng, std::size_t n, long bound = 4) {
  IntVector v(n);
  for (auto& x : v) x = std::uniform_int_distribution<long>(-bound, bound)(rng);
  return v;
}

struct Case {
  std::string label;
  GModule a;
  GModule b;
};

std::vector<Case> cases() {
  std::vector<Case> out;
  for (const char* name : {"c2-res", "c3", "s3-finite"}) {
    const TorusFixture f = builtin_fixture(name);
    out.push_back({std::string(name) + " L,Lhat", f.lattice, f.lattice_dual()});
    out.push_back({std::string(name) + " Lhat,Z", f.lattice_dual(), GModule::trivial_free(f.group_ptr(), 1)});
  }
  out.push_back({"sign,sign", sign(2), sign(2)});
  out.push_back({"sign4,Z/2", sign(4), GModule::trivial(cyclic(4), {2})});
  return out;
}

/// Random cycle: combination of homology generators plus a random boundary.
Chain random_cycle(const BarComplex& bar, std::mt19937_64& rng, bool boundary_only) {
  IntVector v(bar.dim(1));
  if (!boundary_only)
    for (std::size_t k = 0; k < bar.homology(1).group().num_coordinates(); ++k)
      v = add(v, scale(std::uniform_int_distribution<long>(-2, 2)(rng), bar.homology(1).quotient.representative(k)));
  v = add(v, bar.boundary(2).apply(random_vector(rng, bar.dim(2), 1)));
  return bar.chain(v, 1);
}

Cochain random_cocycle(const BarComplex& bar, std::size_t k, std::mt19937_64& rng, bool coboundary_only) {
  IntVector v(bar.dim(k));
  if (!coboundary_only)
    for (std::size_t j = 0; j < bar.cohomology(k).group().num_coordinates(); ++j)
      v = add(v, scale(std::uniform_int_distribution<long>(-2, 2)(rng), bar.cohomology(k).quotient.representative(j)));
  if (k == 1) {
    Cochain d = coboundary_of_element(bar.module(), random_vector(rng, bar.module().rank()));
    v = add(v, bar.flatten(d));
  } else {
    v = add(v, bar.coboundary(k - 1).apply(random_vector(rng, bar.dim(k - 1), 1)));
  }
  return bar.cochain(v, k);
}

IntVector random_norm_zero(const GModule& a, const BarComplex& bar, std::mt19937_64& rng, bool augmentation_only) {
  IntVector v(a.rank());
  if (!augmentation_only)
    for (std::size_t k = 0; k < bar.tate(-1).group().num_coordinates(); ++k)
      v = add(v, scale(std::uniform_int_distribution<long>(-2, 2)(rng), bar.tate(-1).quotient.representative(k)));
  const IntMatrix aug = augmentation_columns(a);
  if (aug.cols() > 0) v = add(v, aug.apply(random_vector(rng, aug.cols(), 2)));
  return a.reduce(v);
}

}  // namespace

TEST_CASE("cup (-1, 1): worked example and contracts") {
  const GModule s = sign(2);
  Cochain r(2, 1, 1);
  r.set({1}, {1});
  IntVector c = cup_m1_1(s, s, {1}, r);
  CHECK(c == IntVector{1});
  BarComplex ss(tensor(s, s), 1);
  CHECK(ss.module().has_trivial_action());
  CHECK(ss.tate(0).group() == FinAbGroup::from_invariants(0, {2}));
  CHECK(!is_zero(ss.tate_class(0, c)));
  CHECK(is_zero(cup_m1_1(s, s, {0}, r)));
  CHECK(is_zero(cup_m1_1(s, s, {1}, Cochain(2, 1, 1))));
  GModule triv = GModule::trivial_free(cyclic(2), 1);
  CHECK_THROWS_AS(cup_m1_1(triv, s, {1}, r), ContractViolation);
  Cochain bad(2, 1, 1);
  bad.set({1}, {1});
  CHECK_THROWS_AS(cup_m1_1(s, triv, {1}, bad), ContractViolation);
}

TEST_CASE("cup (2, -2) on the quadratic valuation model") {
  const TorusFixture f = builtin_fixture("c2-split");
  Chain x(2, 1, 1);
  x.set({1}, {1});
  IntVector c = cup_2_m2(f.formation_module(), f.lattice_dual(), f.weil.cocycle(), x);
  CHECK(c == IntVector{1});
  BarComplex bar(tensor(f.formation_module(), f.lattice_dual()), 1);
  CHECK(bar.tate_class(0, c) == IntVector{1});
  CHECK(is_zero(cup_2_m2(f.formation_module(), f.lattice_dual(), Cochain(2, 2, 1), x)));
  CHECK(is_zero(cup_2_m2(f.formation_module(), f.lattice_dual(), f.weil.cocycle(), Chain(2, 1, 1))));
}

TEST_CASE("cup products are well defined on classes") {
  std::mt19937_64 rng(5);
  for (const Case& cs : cases()) {
    CAPTURE(cs.label);
    BarComplex ba(cs.a, 2), bb(cs.b, 2);
    BarComplex ab_bar(tensor(cs.a, cs.b), 1), ba_bar(tensor(cs.b, cs.a), 1);
    for (int trial = 0; trial < 4; ++trial) {
      // (-1, 1)
      IntVector a = random_norm_zero(cs.a, ba, rng, false);
      IntVector a0 = random_norm_zero(cs.a, ba, rng, true);
      Cochain r = random_cocycle(bb, 1, rng, false);
      Cochain r0 = random_cocycle(bb, 1, rng, true);
      CHECK(is_zero(ab_bar.tate_class(0, cup_m1_1(cs.a, cs.b, a0, r))));
      CHECK(is_zero(ab_bar.tate_class(0, cup_m1_1(cs.a, cs.b, a, r0))));
      CHECK(ab_bar.tate_class(0, cup_m1_1(cs.a, cs.b, a, r + r0)) ==
            ab_bar.tate_class(0, cup_m1_1(cs.a, cs.b, a, r)));

      // (-2, 1)
      Chain x = random_cycle(bb, rng, false);
      Chain x0 = random_cycle(bb, rng, true);
      Cochain f = random_cocycle(ba, 1, rng, false);
      Cochain f0 = random_cocycle(ba, 1, rng, true);
      CHECK(is_zero(ba_bar.tate_class(-1, cup_m2_1(cs.b, cs.a, x0, f))));
      CHECK(is_zero(ba_bar.tate_class(-1, cup_m2_1(cs.b, cs.a, x, f0))));

      // (2, -2)
      Cochain u = random_cocycle(bb, 2, rng, false);
      Cochain u0 = random_cocycle(bb, 2, rng, true);
      Chain y = random_cycle(ba, rng, false);
      Chain y0 = random_cycle(ba, rng, true);
      CHECK(is_zero(ba_bar.tate_class(0, cup_2_m2(cs.b, cs.a, u0, y))));
      CHECK(is_zero(ba_bar.tate_class(0, cup_2_m2(cs.b, cs.a, u, y0))));

      // (-1, 2): a cocycle, trivial on norm-zero augmentation elements and on coboundaries.
      Cochain c = cup_m1_2(cs.a, cs.b, a, u);
      CHECK(ab_bar.is_cocycle(c));
      CHECK(ab_bar.is_coboundary(cup_m1_2(cs.a, cs.b, a0, u)).has_value());
      CHECK(ab_bar.is_coboundary(cup_m1_2(cs.a, cs.b, a, u0)).has_value());
    }
  }
}

TEST_CASE("cup (-2, 1) is bilinear and commutes with dimension shifting") {
  std::mt19937_64 rng(9);
  for (const Case& cs : cases()) {
    CAPTURE(cs.label);
    BarComplex ba(cs.a, 1), bb(cs.b, 1);
    const GModule bxa = tensor(cs.b, cs.a);
    BarComplex ba_bar(bxa, 1);
    const GModule ib = tensor(augmentation_ideal(cs.a.group_ptr()), cs.b);
    const GModule ibxa = tensor(ib, cs.a);
    BarComplex shifted(ibxa, 1);
    const std::size_t n = cs.a.group().order();
    for (int trial = 0; trial < 4; ++trial) {
      Chain x = random_cycle(bb, rng, false);
      Cochain f1 = random_cocycle(ba, 1, rng, false);
      Cochain f2 = random_cocycle(ba, 1, rng, false);
      Cochain sum = f1;
      for (std::size_t i = 0; i < sum.data().size(); ++i) sum.data()[i] += f2.data()[i];
      CHECK(bxa.equivalent(cup_m2_1(cs.b, cs.a, x, sum),
                           add(cup_m2_1(cs.b, cs.a, x, f1), cup_m2_1(cs.b, cs.a, x, f2))));

      // delta(F) = sum_g (g - 1) (x) g F in I (x) (B (x) A).
      IntVector big = cup_m2_1(cs.b, cs.a, x, f1);
      IntVector delta_f(ibxa.rank());
      for (Element g = 1; g < n; ++g) {
        IntVector gf = bxa.act(g, big);
        for (std::size_t j = 0; j < gf.size(); ++j) delta_f[(g - 1) * bxa.rank() + j] += gf[j];
      }
      IntVector delta_x = dim_shift_delta(cs.b, x);
      IntVector via_shift = cup_m1_1(ib, cs.a, delta_x, f1);
      CHECK(shifted.tate_class(0, delta_f) == shifted.tate_class(0, via_shift));
    }
  }
}

TEST_CASE("class formation check") {
  for (std::size_t n : {1, 2, 3, 4, 5, 6}) {
    ExtensionGroup w = valuation_model(n);
    ClassFormationReport r = class_formation_check(FundamentalClassData::from(w));
    CHECK(r.pass());
    CHECK(r.subgroups.size() >= 1);
  }
  ClassFormationReport z8 = class_formation_check(FundamentalClassData::from(builtin_fixture("z8").weil));
  REQUIRE(!z8.pass());
  CHECK(z8.failure()->h1 == FinAbGroup::from_invariants(0, {2}));
  CHECK(z8.failure()->witness.find("H^1 = Z/2") != std::string::npos);
  CHECK(!class_formation_check(FundamentalClassData::from(builtin_fixture("s3-finite").weil)).pass());
  ClassFormationReport zero = class_formation_check({GModule::trivial_free(cyclic(3), 0), Cochain(3, 2, 0)});
  CHECK(!zero.pass());
  CHECK(zero.failure()->witness.find("not cyclic of order 3") != std::string::npos);
  CHECK_THROWS_AS(class_formation_check({sign(2), Cochain(2, 2, 1)}), UnsupportedModel);
  // Twice the carry cocycle generates an index-2 subgroup of H^2.
  Cochain twice = carry_cocycle(4);
  for (auto& x : twice.data()) x *= 2;
  ClassFormationReport r = class_formation_check({GModule::trivial_free(cyclic(4), 1), twice});
  REQUIRE(!r.pass());
  CHECK(r.failure()->witness.find("restricted class has order") != std::string::npos);
}

TEST_CASE("cup with the fundamental class is an isomorphism exactly for class formations") {
  for (const auto& name : builtin_fixture_names()) {
    CAPTURE(name);
    const TorusFixture f = builtin_fixture(name);
    FundamentalClassData data = FundamentalClassData::from(f.weil);
    const bool formation = class_formation_check(data).pass();
    CHECK(formation == f.formation);
    std::vector<GModule> mods{f.lattice, f.lattice_dual(), GModule::trivial_free(f.group_ptr(), 1)};
    bool all_iso = true;
    for (const GModule& a : mods)
      for (int i : {-2, -1}) {
        InducedMap m = cup_with_fundamental_class(data, a, i);
        all_iso = all_iso && m.map.is_bijective();
        if (formation) CHECK(tate_nakayama_iso(data, a, i).map.is_bijective());
      }
    CHECK(all_iso == formation);
    if (!formation) CHECK_THROWS_AS(tate_nakayama_iso(data, f.lattice_dual(), -2), HypothesisFailure);
  }
  const TorusFixture c2 = builtin_fixture("c2-split");
  InducedMap m = tate_nakayama_iso(FundamentalClassData::from(c2.weil), c2.lattice_dual(), -2);
  CHECK(m.map.source() == FinAbGroup::from_invariants(0, {2}));
  CHECK(m.map.target() == FinAbGroup::from_invariants(0, {2}));
  InducedMap zero = tate_nakayama_iso(FundamentalClassData::from(c2.weil), GModule::trivial_free(c2.group_ptr(), 0), -2);
  CHECK(zero.map.source().is_trivial());
  CHECK(zero.map.is_bijective());
  CHECK_THROWS_AS(cup_with_fundamental_class(FundamentalClassData::from(c2.weil), c2.lattice, 1), DomainError);
}
