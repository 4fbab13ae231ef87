#include "brute.hpp"
#include "doctest.h"
#include "torusdual/errors.hpp"
#include "torusdual/homology.hpp"

#include <cmath>
#include <memory>
#include <random>

using namespace torusdual;

namespace {

GroupPtr cyclic(std::size_t n) { return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n)); }

GModule sign_module(std::size_t n_even, IntVector moduli = {0}) {
  auto g = cyclic(n_even);
  return GModule::from_generators(g, std::move(moduli), {{1, IntMatrix::from_rows({{-1}})}});
}

GModule c3_lattice() {
  return GModule::from_generators(cyclic(3), {0, 0}, {{1, IntMatrix::from_rows({{0, -1}, {1, -1}})}});
}

GModule s3_root_lattice() {
  auto s3 = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric3());
  auto gens = s3->generators();
  return GModule::from_generators(s3, {0, 0},
                                  {{gens[0], IntMatrix::from_rows({{-1, 1}, {0, 1}})},
                                   {gens[1], IntMatrix::from_rows({{1, 0}, {1, -1}})}});
}

brute::FiniteModule to_brute(const GModule& m) {
  brute::FiniteModule b;
  b.table = m.group().table();
  for (const auto& x : m.moduli()) b.moduli.push_back(x.get_si());
  for (const auto& a : m.actions()) {
    std::vector<std::vector<long>> rows(a.rows(), std::vector<long>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j).get_si();
    b.action.push_back(rows);
  }
  return b;
}

}  // namespace

TEST_CASE("boundary examples") {
  BarComplex triv(GModule::trivial_free(cyclic(2), 1));
  CHECK(triv.boundary(1) == IntMatrix::from_rows({{0}}));
  BarComplex sign(sign_module(2));
  CHECK(sign.boundary(1) == IntMatrix::from_rows({{-2}}));
  BarComplex zero_degree(GModule::trivial_free(cyclic(3), 1), 0);
  CHECK(zero_degree.homology(0).group().to_string() == "Z");
  CHECK_THROWS_AS(zero_degree.homology(1), DomainError);
}

TEST_CASE("d^2 = 0 for chains and cochains") {
  for (const GModule& m : {c3_lattice(), s3_root_lattice(), dual_lattice(s3_root_lattice()),
                           tensor(s3_root_lattice(), GModule::trivial(s3_root_lattice().group_ptr(), {3}))}) {
    BarComplex b(m);
    for (std::size_t k = 2; k <= 3; ++k) {
      IntMatrix dd = b.boundary(k - 1) * b.boundary(k);
      for (std::size_t i = 0; i < dd.rows(); ++i)
        for (std::size_t j = 0; j < dd.cols(); ++j) reduce_mod(dd(i, j), b.moduli(k - 2)[i]);
      CHECK(dd.is_zero());
    }
    for (std::size_t k = 0; k + 1 <= 2; ++k) {
      IntMatrix dd = b.coboundary(k + 1) * b.coboundary(k);
      for (std::size_t i = 0; i < dd.rows(); ++i)
        for (std::size_t j = 0; j < dd.cols(); ++j) reduce_mod(dd(i, j), b.moduli(k + 2)[i]);
      CHECK(dd.is_zero());
    }
  }
}

TEST_CASE("cochains of the dual module are dual to chains") {
  for (const GModule& m : {c3_lattice(), s3_root_lattice(), sign_module(4)}) {
    BarComplex chains(m), cochains(dual_lattice(m));
    for (std::size_t k = 0; k <= 2; ++k) CHECK(cochains.coboundary(k) == chains.boundary(k + 1).transpose());
  }
}

TEST_CASE("classical groups of Z/2 with integer coefficients") {
  BarComplex b(GModule::trivial_free(cyclic(2), 1));
  CHECK(b.homology(1).group().to_string() == "Z/2");
  CHECK(b.cohomology(1).group().to_string() == "0");
  CHECK(b.cohomology(2).group().to_string() == "Z/2");
  CHECK(b.tate(0).group().to_string() == "Z/2");
  CHECK(b.tate(-1).group().to_string() == "0");
  BarComplex s(sign_module(2));
  CHECK(s.tate(-1).group().to_string() == "Z/2");
  CHECK(s.tate(0).group().to_string() == "0");
}

TEST_CASE("period-two pattern for cyclic groups") {
  for (std::size_t n : {2, 3, 4, 6}) {
    BarComplex b(GModule::trivial_free(cyclic(n), 1));
    FinAbGroup zn = FinAbGroup::from_invariants(0, {Integer(static_cast<long>(n))});
    for (int i = -3; i <= 3; ++i) CHECK(b.tate(i).group() == (i % 2 == 0 ? zn : FinAbGroup()));
  }
  for (const GModule& m : {c3_lattice(), dual_lattice(c3_lattice()), sign_module(4), sign_module(2, {3})}) {
    BarComplex b(m);
    for (int i = -3; i <= 1; ++i) CHECK(b.tate(i).group() == b.tate(i + 2).group());
  }
}

TEST_CASE("group order annihilates Tate groups; lattices give finite groups") {
  for (const GModule& m : {c3_lattice(), s3_root_lattice(), dual_lattice(s3_root_lattice())}) {
    BarComplex b(m);
    for (int i = -3; i <= 3; ++i) {
      CHECK(b.tate(i).group().free_rank() == 0);
      CHECK(b.tate(i).group().annihilated_by(Integer(static_cast<long>(m.group().order()))));
    }
  }
}

TEST_CASE("orders agree with brute-force enumeration") {
  std::vector<GModule> mods{GModule::trivial(cyclic(2), {4}), sign_module(2, {4}), sign_module(4, {3}),
                            GModule::trivial(cyclic(3), {3}),
                            GModule::from_generators(cyclic(2), {2, 2}, {{1, IntMatrix::from_rows({{0, 1}, {1, 0}})}}),
                            GModule::from_generators(cyclic(4), {2, 2}, {{1, IntMatrix::from_rows({{1, 1}, {0, 1}})}})};
  auto s3 = std::make_shared<const FiniteGroup>(FiniteGroup::symmetric3());
  mods.push_back(GModule::trivial(s3, {2}));
  for (const GModule& m : mods) {
    BarComplex b(m);
    brute::FiniteModule bm = to_brute(m);
    // Enumeration cost |A|^((n-1)^k); keep each run below 2^16 tables.
    auto affordable = [&](std::size_t k) {
      double size = 1;
      for (const auto& x : m.moduli()) size *= static_cast<double>(x.get_si());
      return std::pow(size, static_cast<double>(ipow(m.group().order() - 1, k))) <= 65536.0;
    };
    for (std::size_t k = 0; k <= 2; ++k) {
      if (affordable(k))
        CHECK(b.cohomology(k).group().order() == Integer(static_cast<long>(brute::cohomology_order(bm, k))));
      if (k >= 1 && affordable(k + 1))
        CHECK(b.homology(k).group().order() == Integer(static_cast<long>(brute::homology_order(bm, k))));
    }
  }
}

TEST_CASE("class extraction and representatives") {
  BarComplex b(GModule::trivial_free(cyclic(2), 1));
  Chain x(2, 1, 1);
  x.set({1}, {1});
  CHECK(b.homology_class(x) == IntVector{1});
  x.set({1}, {2});
  CHECK(b.homology_class(x) == IntVector{0});
  BarComplex s(sign_module(2));
  Chain y(2, 1, 1);
  y.set({1}, {1});
  CHECK_THROWS_AS(s.homology_class(y), ContractViolation);
  const ClassGroup& h2 = b.cohomology(2);
  for (std::size_t k = 0; k < h2.group().num_coordinates(); ++k) {
    Cochain f = b.cohomology_representative(2, k);
    CHECK(b.is_cocycle(f));
    IntVector e(h2.group().num_coordinates());
    e[k] = 1;
    CHECK(b.cohomology_class(f) == e);
  }
}

TEST_CASE("coboundary detection") {
  BarComplex b(GModule::trivial(cyclic(2), {4}));
  Cochain zero(2, 2, 1);
  auto p0 = b.is_coboundary(zero);
  REQUIRE(p0);
  CHECK(b.is_cocycle(zero));
  Cochain u(2, 2, 1);
  u.set({1, 1}, {2});
  auto p = b.is_coboundary(u);
  REQUIRE(p);
  // delta v (s, s) = v(s) - v(e) + v(s) = 2 v(s)
  CHECK(floor_mod(2 * p->value({1})[0], 4) == 2);
  u.set({1, 1}, {1});
  CHECK_FALSE(b.is_coboundary(u));
  Cochain bad(2, 2, 1);
  bad.set({0, 1}, {1});
  CHECK_THROWS_AS(b.is_coboundary(bad), ContractViolation);
}

TEST_CASE("universal coefficients pairing") {
  BarComplex b(GModule::trivial_free(cyclic(2), 1));
  QCochain f(2, 1, 1);
  f.set({1}, {QmodZ(1, 2)});
  Chain x(2, 1, 1);
  x.set({1}, {1});
  CHECK(uct_pairing(f, x) == QmodZ(1, 2));
  CHECK(uct_pairing(QCochain(2, 1, 1), x).is_zero());
  CHECK(uct_pairing(f, Chain(2, 1, 1)).is_zero());
  CHECK_THROWS_AS(uct_pairing(QCochain(2, 2, 1), x), ContractViolation);

  UniversalCoefficients uct(b, 1);
  CHECK(uct.evaluate(f) == QVector{QmodZ(1, 2)});
  CHECK(uct.slice(12).group().to_string() == "Z/2");
  CHECK(uct.slice(3).group().to_string() == "0");
  QCochain lifted = uct.lift({QmodZ(1, 2)});
  CHECK(uct.evaluate(lifted) == QVector{QmodZ(1, 2)});
  CHECK(uct.evaluate(uct.lift({QmodZ()})) == QVector{QmodZ()});
  CHECK_THROWS_AS(uct.lift({QmodZ(1, 3)}), ContractViolation);
  CHECK_THROWS_AS(UniversalCoefficients(b, 0), DomainError);
}

TEST_CASE("dual slices match Hom(H_n, Q/Z)[d]") {
  for (const GModule& m : {dual_lattice(c3_lattice()), dual_lattice(s3_root_lattice()), sign_module(4)}) {
    BarComplex b(m);
    for (std::size_t n = 1; n <= 2; ++n) {
      UniversalCoefficients uct(b, n);
      const FinAbGroup& h = uct.homology().group();
      for (long d = 1; d <= 12; ++d) {
        Integer expect = 1;
        for (std::size_t i = 0; i < h.free_rank(); ++i) expect *= d;
        for (const auto& t : h.torsion()) expect *= gcd_of(t, Integer(d));
        CHECK(uct.slice(d).group().order() == expect);
      }
    }
  }
}

TEST_CASE("pairing depends only on classes") {
  std::mt19937_64 rng(5);
  GModule m = direct_sum(dual_lattice(s3_root_lattice()), GModule::trivial_free(s3_root_lattice().group_ptr(), 1));
  BarComplex b(m);
  UniversalCoefficients uct(b, 1);
  REQUIRE(uct.homology().group().to_string() == "Z/2");
  DualSlice slice = uct.slice(6);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    IntVector c(slice.group().num_coordinates());
    for (auto& v : c) v = coef(rng);
    QVector f = slice.cochain(c);
    // A random cycle: a class representative plus a boundary.
    const Subquotient& h = uct.homology().quotient;
    IntVector x = h.representative(0);
    IntVector y(b.dim(2));
    for (auto& v : y) v = coef(rng);
    IntVector x2 = add(x, b.boundary(2).apply(y));
    CHECK(dot(x, f) == dot(x2, f));
    // Adding a coboundary of a random d-torsion 0-cochain changes nothing.
    QVector t(b.dim(0));
    for (auto& v : t) v = QmodZ(coef(rng), 6);
    QVector f2 = add(f, multiply(b.boundary(1).transpose(), t));
    CHECK(dot(x, f) == dot(x, f2));
    CHECK(slice.coordinates(f) == slice.coordinates(f2));
  }
}

TEST_CASE("size bound is enforced") {
  BarComplex b(GModule::trivial_free(cyclic(6), 1), 3, 1000);
  CHECK_THROWS_AS(b.cohomology(3), SizeLimitExceeded);
}
