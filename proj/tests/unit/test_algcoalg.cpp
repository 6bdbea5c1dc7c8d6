#include "doctest.h"
#include "entwine/algcoalg/validate.hpp"
#include "entwine/errors.hpp"
#include "helpers.hpp"

using namespace testing_util;
using namespace entwine::algcoalg;

namespace {

const Scalar one = Scalar::one(Q);

FiniteAlgebra kz2_algebra(std::vector<StructureTriple> mult) {
  return FiniteAlgebra::from_triples(Q, 2, {"1", "g"}, mult, ints({1, 0}));
}

std::vector<StructureTriple> kz2_mult() { return {{0, 0, 0, one}, {0, 1, 1, one}, {1, 0, 1, one}, {1, 1, 0, one}}; }

}  // namespace

TEST_CASE("shapes flatten leftmost-first") {
  Shape s = {2, 3, 2};
  CHECK(flatten({1, 2, 0}, s) == 1 * 6 + 2 * 2 + 0);
  CHECK(unflatten(11, s) == std::vector<std::size_t>{1, 2, 1});
  CHECK(shape_size({}) == 1);
  CHECK(power({2}, 3) == Shape{2, 2, 2});
}

TEST_CASE("compose, tensor and identity") {
  std::mt19937_64 rng(1);
  auto f = random_map(rng, {2}, {3});
  CHECK(compose(LinearMap::identity(Q, {3}), f) == f);
  CHECK(compose(f, LinearMap::identity(Q, {2})) == f);
  auto t = tensor(f, random_map(rng, {3}, {2}));
  CHECK(t.domain() == Shape{2, 3});
  CHECK(t.codomain() == Shape{3, 2});
  CHECK_THROWS_AS(compose(f, f), ShapeError);
}

TEST_CASE("tensor respects composition") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_map(rng, {2}, {3}), f2 = random_map(rng, {2}, {2});
    auto g = random_map(rng, {3}, {2}), g2 = random_map(rng, {2}, {3});
    CHECK(compose(tensor(f, g), tensor(f2, g2)) == tensor(compose(f, f2), compose(g, g2)));
  }
}

TEST_CASE("permutation and flip move factors") {
  auto p = permutation(Q, {2, 3, 2}, {2, 0, 1});  // x⊗y⊗z -> y⊗z⊗x
  CHECK(p.codomain() == Shape{3, 2, 2});
  CHECK(eval(p, {1, 2, 0}) == at_digits({3, 2, 2}, {2, 0, 1}));
  auto fl = flip(Q, {2}, {3});
  CHECK(compose(flip(Q, {3}, {2}), fl) == LinearMap::identity(Q, {2, 3}));
}

TEST_CASE("algebra validation") {
  CHECK(validate_algebra(zoo::ground_algebra(Q)).ok());
  CHECK(validate_algebra(kz2_algebra(kz2_mult())).ok());

  SUBCASE("broken right unit") {
    auto m = kz2_mult();
    m[2].coeff = Scalar::zero(Q);  // g·1 = 0
    auto r = validate_algebra(kz2_algebra(m));
    REQUIRE_FALSE(r.ok());
    CHECK(r.checks[1].passed);
    CHECK_FALSE(r.checks[2].passed);
    CHECK(r.checks[2].witness == "g");
  }
  SUBCASE("g·g = g is still an algebra") {
    // any unital algebra on span{1, g} is associative
    auto m = kz2_mult();
    m[3].k = 1;
    CHECK(validate_algebra(kz2_algebra(m)).ok());
  }
  SUBCASE("associativity violation is located") {
    // g·g = 1, 1·g = 0: first clash is (1g)g = 0 against 1(gg) = 1
    auto a = kz2_algebra({{0, 0, 0, one}, {1, 0, 1, one}, {1, 1, 0, one}});
    auto r = validate_algebra(a);
    const AxiomCheck* assoc = nullptr;
    for (const auto& c : r.checks)
      if (c.axiom == "associativity") assoc = &c;
    REQUIRE(assoc);
    CHECK_FALSE(assoc->passed);
    CHECK(assoc->witness == "1⊗g⊗g");
  }
}

TEST_CASE("coalgebra validation") {
  CHECK(validate_coalgebra(zoo::ground_coalgebra(Q)).ok());
  std::vector<StructureTriple> d = {{0, 0, 0, one}, {1, 1, 1, one}};
  CHECK(validate_coalgebra(FiniteCoalgebra::from_triples(Q, 2, {"1", "g"}, d, ints({1, 1}))).ok());
  auto bad = validate_coalgebra(FiniteCoalgebra::from_triples(Q, 2, {"1", "g"}, d, ints({1, 0})));
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.first_failure()->witness == "g");
  CHECK_THROWS_AS(require(bad), ValidationError);
}

TEST_CASE("counit axiom as a composite") {
  auto c = zoo::cyclic_group_algebra(Q, 3).coalgebra;
  auto idA = LinearMap::identity(Q, {2});
  auto idC = LinearMap::identity(Q, {3});
  auto lhs = compose(tensor(idA, c.counit_map(), idC), tensor(idA, c.comult));
  CHECK(lhs.reshaped({2, 3}, {2, 3}) == LinearMap::identity(Q, {2, 3}));
}

TEST_CASE("bimodule and bicomodule validation") {
  auto h = zoo::sweedler_h4(Q);
  CHECK(validate_bimodule(h.algebra, regular_bimodule(h.algebra)).ok());
  CHECK(validate_bimodule(h.algebra, free_bimodule(h.algebra)).ok());
  CHECK(validate_bicomodule(h.coalgebra, regular_bicomodule(h.coalgebra)).ok());
  CHECK(validate_bicomodule(h.coalgebra, free_bicomodule(h.coalgebra)).ok());

  // g acting as a projection breaks (gg)·m = g·(g·m)
  auto a = kz2_algebra(kz2_mult());
  Bimodule m = regular_bimodule(a);
  exactla::MatrixBuilder b(Q, 2, 4);
  b.add(0, 0, one);
  b.add(1, 1, one);
  b.add(0, 2, one);  // g·1 = 1
  m.left = LinearMap({2, 2}, {2}, b.build());
  CHECK_FALSE(validate_bimodule(a, m).ok());
}

TEST_CASE("bialgebra validation rejects incompatible pairs") {
  auto h = zoo::cyclic_group_algebra(Q, 2);
  CHECK(validate_bialgebra(h.algebra, h.coalgebra).ok());
  // primitive-style coproduct on g is a coalgebra but not multiplicative for g² = 1
  auto c = FiniteCoalgebra::from_triples(Q, 2, {"1", "g"}, {{0, 0, 0, one}, {1, 1, 0, one}, {1, 0, 1, one}},
                                         ints({1, 0}));
  REQUIRE(validate_coalgebra(c).ok());
  CHECK_FALSE(validate_bialgebra(h.algebra, c).ok());
}
