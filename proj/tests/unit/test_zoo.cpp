#include "doctest.h"
#include "entwine/algcoalg/validate.hpp"
#include "entwine/errors.hpp"
#include "helpers.hpp"

using namespace testing_util;
using namespace entwine::zoo;
using entwine::algcoalg::compose;
using entwine::algcoalg::StructureTriple;
using entwine::entwining::check_bowtie;

TEST_CASE("trivial entwinings") {
  auto k = trivial_entwining(ground_algebra(Q), ground_coalgebra(Q));
  CHECK(k.psi().matrix() == Matrix::identity(Q, 1));
  auto h = cyclic_group_algebra(Q, 2);
  auto t = trivial_entwining(h.algebra, h.coalgebra);
  CHECK(compose(t.psi(), t.psi()) == LinearMap::identity(Q, {2, 2}));
}

TEST_CASE("kZ2 self-entwining entries") {
  auto e = fixture("z2");
  CHECK(eval(e.psi(), {1, 1}) == at_digits({2, 2}, {1, 0}));  // ψ(g⊗g) = g⊗1
  CHECK(eval(e.psi(), {0, 1}) == at_digits({2, 2}, {1, 1}));  // ψ(1⊗g) = g⊗g
  CHECK(eval(e.psi(), {1, 0}) == at_digits({2, 2}, {0, 1}));  // ψ(g⊗1) = 1⊗g
}

TEST_CASE("self-entwining is a bow-tie exactly for bialgebras") {
  for (const auto& h : {cyclic_group_algebra(Q, 2), cyclic_group_algebra(Q, 3), sweedler_h4(Q)}) {
    CHECK(entwine::algcoalg::validate_bialgebra(h.algebra, h.coalgebra).ok());
    CHECK(check_bowtie(h.algebra, h.coalgebra, self_entwining_map(h.algebra, h.coalgebra)).ok());
  }
  // Δg = g⊗1 + 1⊗g is coassociative but not multiplicative for g² = 1
  auto h = cyclic_group_algebra(Q, 2);
  const Scalar one = Scalar::one(Q);
  auto c = FiniteCoalgebra::from_triples(Q, 2, {"1", "g"}, {{0, 0, 0, one}, {1, 1, 0, one}, {1, 0, 1, one}},
                                         ints({1, 0}));
  CHECK_FALSE(entwine::algcoalg::validate_bialgebra(h.algebra, c).ok());
  CHECK_FALSE(check_bowtie(h.algebra, c, self_entwining_map(h.algebra, c)).ok());
  CHECK_THROWS_AS(bialgebra_self_entwining(h.algebra, c), BowTieError);
}

TEST_CASE("comodule algebra entwinings") {
  auto h = cyclic_group_algebra(Q, 2);
  SUBCASE("regular coaction") {
    auto e = comodule_algebra_entwining(h.algebra, h.coalgebra, h.algebra, h.coalgebra.comult);
    CHECK(e.psi() == self_entwining_map(h.algebra, h.coalgebra));
  }
  SUBCASE("trivial coaction gives the flip") {
    auto a = dual_numbers(Q);
    exactla::MatrixBuilder b(Q, 4, 2);
    b.add(0, 0, Scalar::one(Q));  // 1 -> 1⊗1
    b.add(2, 1, Scalar::one(Q));  // x -> x⊗1
    auto e = comodule_algebra_entwining(h.algebra, h.coalgebra, a, LinearMap({2}, {2, 2}, b.build()));
    CHECK(e.psi() == trivial_entwining_map(a, h.coalgebra));
  }
  SUBCASE("graded dual numbers") {
    auto e = fixture("graded-dual");
    // ψ(g⊗x) = x⊗g·g = x⊗1
    CHECK(eval(e.psi(), {1, 1}) == at_digits({2, 2}, {1, 0}));
  }
  SUBCASE("a coaction that is not multiplicative is refused") {
    auto a = dual_numbers(Q);
    exactla::MatrixBuilder b(Q, 4, 2);
    b.add(1, 0, Scalar::one(Q));  // 1 -> 1⊗g
    b.add(3, 1, Scalar::one(Q));  // x -> x⊗g
    CHECK_THROWS_AS(comodule_algebra_entwining(h.algebra, h.coalgebra, a, LinearMap({2}, {2, 2}, b.build())),
                    ValidationError);
  }
}

TEST_CASE("Hopf algebras") {
  CHECK_NOTHROW(validate_hopf(sweedler_h4(Q)));
  CHECK_NOTHROW(validate_hopf(sweedler_h4(FieldSpec::prime(3))));
  CHECK_THROWS_AS(sweedler_h4(FieldSpec::prime(2)), PreconditionError);
  auto z2 = cyclic_group_algebra(Q, 2);
  CHECK(z2.algebra.labels == std::vector<std::string>{"1", "g"});
  CHECK(z2.antipode.matrix() == Matrix::identity(Q, 2));
  CHECK_THROWS(cyclic_group_algebra(Q, 0));
}

TEST_CASE("translation maps") {
  auto z2 = cyclic_group_algebra(Q, 2);
  auto tau = translation_map(z2);
  CHECK(eval(tau, {1}) == at_digits({2, 2}, {1, 1}));
  CHECK(eval(tau, {0}) == at_digits({2, 2}, {0, 0}));
  auto s = sweedler_h4(Q);
  auto ts = translation_map(s);
  // τ(x) = S(x)⊗1 + S(g)⊗x = -gx⊗1 + g⊗x
  CHECK(eval(ts, {2}) == exactla::subtract(at_digits({4, 4}, {1, 2}), at_digits({4, 4}, {3, 0})));
}

TEST_CASE("fixture registry") {
  auto names = fixture_names();
  for (const char* n : {"k", "z2", "z3", "sweedler", "trivial-z2", "dual-numbers", "graded-dual"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  for (const auto& n : names) {
    CHECK_FALSE(fixture_description(n).empty());
    auto e = fixture(n);
    CHECK(check_bowtie(e.algebra(), e.coalgebra(), e.psi()).ok());
  }
  CHECK_THROWS_AS(fixture("nope"), PreconditionError);
}
