#include "doctest.h"
#include "entwine/complexes/complexes.hpp"
#include "entwine/deform/deform.hpp"
#include "entwine/errors.hpp"
#include "entwine/exactla/linalg.hpp"
#include "helpers.hpp"

using namespace testing_util;
using namespace entwine::deform;

namespace {

const std::vector<std::string> kAll = {"k", "z2", "z3", "sweedler", "trivial-z2", "dual-numbers", "graded-dual"};

Vector random_vector(std::mt19937_64& rng, std::size_t n) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(Q, static_cast<long>(rng() % 7) - 3);
  return v;
}

bool is_cocycle(const TotalComplex& tc, const Vector& z) { return exactla::is_zero(tc.D(2).apply(z)); }

}  // namespace

TEST_CASE("grid squares commute and both directions square to zero") {
  for (const auto& name : kAll) {
    CAPTURE(name);
    auto e = zoo::fixture(name);
    CHECK_NOTHROW(build_double_complex(e, 2, 2));
  }
  auto g = build_double_complex(zoo::fixture("z2"), 3, 3);
  CHECK(g.dim(1, 2) == 2 * 2 * 2 * 4);
  CHECK(g.horizontal(1, 2).rows() == g.dim(2, 2));
  CHECK(g.vertical(1, 2).cols() == g.dim(1, 2));
  CHECK_THROWS_AS(build_double_complex(zoo::fixture("k"), 4, 1), PreconditionError);
}

TEST_CASE("row zero of the grid is the C_psi(A, A) complex") {
  auto e = zoo::fixture("sweedler");
  auto g = build_double_complex(e, 2, 1);
  auto cx = complexes::build_CpsiAM(e, entwining::bimodule_on_A_Cn(e, 0), 3);
  for (std::size_t m = 0; m < 2; ++m) CHECK(g.horizontal(m, 0) == cx.differential(m));
}

TEST_CASE("C_H dimensions follow the antidiagonal sum") {
  for (const auto& name : kAll) {
    CAPTURE(name);
    auto e = zoo::fixture(name);
    auto tc = build_CH(e, 3);
    for (std::size_t n = 0; n <= 4; ++n) {
      CHECK(tc.dim(n) == CH_dimension_formula(e, n));
      std::size_t s = 0;
      for (const auto& b : tc.blocks[n]) s += b.dim;
      CHECK(s == tc.dim(n));
    }
  }
  auto k = zoo::fixture("k");
  for (std::size_t n = 2; n <= 4; ++n) CHECK(CH_dimension_formula(k, n) == 1 + (n - 1) + 1);
  CHECK(CH_dimension_formula(k, 0) == 0);
  // kZ2: A = C = 2-dimensional
  auto z2 = zoo::fixture("z2");
  CHECK(CH_dimension_formula(z2, 2) == 8 + 2 * 2 * 2 * 2 + 8);
}

TEST_CASE("D squares to zero through degree three on every fixture") {
  for (const auto& name : kAll) {
    CAPTURE(name);
    auto tc = build_CH(zoo::fixture(name), 3);
    for (std::size_t n = 0; n + 1 <= 3; ++n) CHECK((tc.D(n + 1) * tc.D(n)).is_zero());
  }
  CHECK_THROWS_AS(build_CH(zoo::fixture("k"), 4), PreconditionError);
}

TEST_CASE("total cohomology of the ground field") {
  auto tc = build_CH(zoo::fixture("k"), 3);
  CHECK(total_cohomology(tc, 0).betti == 0);
  CHECK(total_cohomology(tc, 1).betti == 0);
  CHECK(total_cohomology(tc, 2).betti == 0);
}

TEST_CASE("zero cochain is the trivial deformation") {
  auto e = zoo::fixture("z2");
  auto tc = build_CH(e, 2);
  auto d = deformation_from_cocycle(e, tc, exactla::zero_vector(Q, tc.dim(2)));
  CHECK(d.mu1.matrix().is_zero());
  CHECK(d.psi1.matrix().is_zero());
  CHECK(d.delta1.matrix().is_zero());
  CHECK(first_order_checks(e, d).ok());
}

TEST_CASE("cocycles of kZ2 give first-order deformations") {
  auto e = zoo::fixture("z2");
  auto tc = build_CH(e, 2);
  auto h2 = total_cohomology(tc, 2);
  REQUIRE(!h2.cocycle_basis.empty());
  for (const auto& z : h2.cocycle_basis) {
    Report r = first_order_checks(e, deformation_from_cochain(e, tc, z));
    CHECK_MESSAGE(r.ok(), (r.first_failure() ? r.first_failure()->name : ""));
  }
}

TEST_CASE("deformation validity is exactly the cocycle condition") {
  std::mt19937_64 rng(0);
  for (const auto& name : kAll) {
    CAPTURE(name);
    auto e = zoo::fixture(name);
    auto tc = build_CH(e, 2);
    const auto basis = total_cohomology(tc, 2).cocycle_basis;
    for (int trial = 0; trial < 4; ++trial) {
      Vector z = random_vector(rng, tc.dim(2));
      CHECK(first_order_checks(e, deformation_from_cochain(e, tc, z)).ok() == is_cocycle(tc, z));
      if (!basis.empty()) {
        Vector y = exactla::zero_vector(Q, tc.dim(2));
        for (const auto& b : basis) y = exactla::add(y, exactla::scale(Scalar(Q, long(rng() % 5) - 2), b));
        CHECK(first_order_checks(e, deformation_from_cochain(e, tc, y)).ok());
      }
    }
  }
}

TEST_CASE("a non-cocycle is rejected") {
  auto e = zoo::fixture("z2");
  auto tc = build_CH(e, 2);
  std::mt19937_64 rng(0);
  Vector z = random_vector(rng, tc.dim(2));
  REQUIRE(!is_cocycle(tc, z));
  CHECK_THROWS_AS(deformation_from_cocycle(e, tc, z), CocycleViolationError);
  CHECK(!coboundary_witness(tc, z));
}

TEST_CASE("coboundaries are equivalent to the trivial deformation") {
  std::mt19937_64 rng(5);
  for (const auto& name : kAll) {
    CAPTURE(name);
    auto e = zoo::fixture(name);
    auto tc = build_CH(e, 2);
    for (int trial = 0; trial < 3; ++trial) {
      Vector w = random_vector(rng, tc.dim(1));
      Vector z = tc.D(1).apply(w);
      auto found = coboundary_witness(tc, z);
      REQUIRE(found);
      CHECK(tc.D(1).apply(*found) == z);
      auto q = coboundary_equivalence(e, tc, z, w);
      CHECK_MESSAGE(q.checks.ok(), (q.checks.first_failure() ? q.checks.first_failure()->witness : ""));
      CHECK(q.alpha1.domain_dim() == e.dim_a());
      CHECK(q.gamma1.domain_dim() == e.dim_c());
    }
  }
}

TEST_CASE("equivalence checks detect a wrong witness") {
  auto e = zoo::fixture("z2");
  auto tc = build_CH(e, 2);
  std::mt19937_64 rng(9);
  Vector w = random_vector(rng, tc.dim(1));
  Vector z = tc.D(1).apply(w);
  Vector other = random_vector(rng, tc.dim(1));
  if (!(tc.D(1).apply(other) == z)) CHECK_THROWS_AS(coboundary_equivalence(e, tc, z, other), PreconditionError);
  CHECK_THROWS_AS(deformation_from_cochain(e, tc, Vector(3, Scalar::zero(Q))), ShapeError);
}
