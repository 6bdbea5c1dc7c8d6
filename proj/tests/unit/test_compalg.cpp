#include "doctest.h"
#include "entwine/compalg/compalg.hpp"
#include "entwine/errors.hpp"
#include "helpers.hpp"

using namespace testing_util;
using namespace entwine::compalg;
using entwine::algcoalg::compose;
using entwine::algcoalg::power;
using entwine::algcoalg::tensor;

namespace {

Cochain random_cochain(std::mt19937_64& rng, const CompContext& ctx, std::size_t m) {
  return ctx.wrap(m, random_map(rng, ctx.domain(m), ctx.codomain(m), ctx.field()));
}

LinearMap idp(std::size_t d, std::size_t n) { return LinearMap::identity(Q, power({d}, n)); }

const std::vector<std::string> kAll = {"k", "z2", "z3", "sweedler", "trivial-z2", "dual-numbers", "graded-dual"};

}  // namespace

TEST_CASE("comp with pi on the right is precomposition by a face") {
  std::mt19937_64 rng(3);
  for (const auto& name : kAll) {
    CompContext ctx(zoo::fixture(name), Side::Algebra);
    const std::size_t da = ctx.entwining().dim_a(), dc = ctx.entwining().dim_c();
    for (std::size_t m = 1; m <= 2; ++m) {
      Cochain f = random_cochain(rng, ctx, m);
      for (std::size_t i = 0; i < m; ++i) {
        LinearMap face = tensor(idp(dc, 1), idp(da, i), ctx.entwining().algebra().mult, idp(da, m - i - 1));
        CHECK(comp_i(ctx, f, i, ctx.pi()).map == compose(f.map, face));
      }
    }
  }
}

TEST_CASE("comp index past the degree gives zero") {
  CompContext ctx(zoo::fixture("z2"), Side::Algebra);
  std::mt19937_64 rng(1);
  Cochain f = random_cochain(rng, ctx, 1), g = random_cochain(rng, ctx, 2);
  CHECK(comp_i(ctx, f, 1, g).map.matrix().is_zero());
  CHECK(comp_i(ctx, f, 5, g).degree == 2);
  CHECK(diamond(ctx, ctx.from_flat(0, random_cochain(rng, ctx, 0).flat()), g).map.matrix().is_zero());
  CHECK_THROWS_AS(comp_i(ctx, ctx.zero(0), 0, ctx.zero(0)), PreconditionError);
}

TEST_CASE("degree one comp against a hand expansion on kZ2") {
  // (f∘0 g)(c, a) = f(c₁, g(c₂, a))
  auto e = zoo::fixture("z2");
  CompContext ctx(e, Side::Algebra);
  const Matrix& delta = e.coalgebra().comult.matrix();
  for (std::size_t fk = 0; fk < ctx.dim(1); ++fk)
    for (std::size_t gk = 0; gk < ctx.dim(1); gk += 3) {
      Cochain f = ctx.basis(1, fk), g = ctx.basis(1, gk);
      Cochain r = comp_i(ctx, f, 0, g);
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t a = 0; a < 2; ++a) {
          Vector expect = exactla::zero_vector(Q, 2);
          for (std::size_t c1 = 0; c1 < 2; ++c1)
            for (std::size_t c2 = 0; c2 < 2; ++c2) {
              Scalar k = delta.at(c1 * 2 + c2, c);
              if (k.is_zero()) continue;
              for (std::size_t o = 0; o < 2; ++o) {
                Scalar go = g.map.matrix().at(o, c2 * 2 + a);
                for (std::size_t t = 0; t < 2; ++t) expect[t] += k * go * f.map.matrix().at(t, c1 * 2 + o);
              }
            }
          CHECK(eval(r.map, {c, a}) == expect);
        }
    }
}

TEST_CASE("diamond basics") {
  std::mt19937_64 rng(5);
  for (const auto& name : kAll)
    for (Side side : {Side::Algebra, Side::Coalgebra}) {
      CAPTURE(name);
      CompContext ctx(zoo::fixture(name), side);
      CHECK(diamond(ctx, ctx.pi(), ctx.pi()).map.matrix().is_zero());
      Cochain f = random_cochain(rng, ctx, 1), g = random_cochain(rng, ctx, 2);
      CHECK(diamond(ctx, f, g).map == comp_i(ctx, f, 0, g).map);
      CHECK(diamond(ctx, g, f).degree == 2);
    }
}

TEST_CASE("side mismatch is rejected") {
  auto e = zoo::fixture("z2");
  CompContext alg(e, Side::Algebra), coalg(e, Side::Coalgebra);
  CHECK_THROWS_AS(comp_i(alg, coalg.pi(), 0, alg.pi()), PreconditionError);
  CHECK_THROWS_AS(cup(coalg, alg.pi(), alg.pi()), PreconditionError);
  CHECK_THROWS_AS(alg.wrap(1, alg.pi().map), ShapeError);
}

TEST_CASE("degree zero products are convolutions") {
  std::mt19937_64 rng(8);
  for (const auto& name : kAll) {
    auto e = zoo::fixture(name);
    CompContext ctx(e, Side::Algebra);
    for (int rep = 0; rep < 3; ++rep) {
      Cochain f = random_cochain(rng, ctx, 0), g = random_cochain(rng, ctx, 0);
      CHECK(sqcup(ctx, f, g).map == entwining::convolution_psi(e, f.map, g.map));
      CHECK(cup(ctx, f, g).map == compose(e.algebra().mult, tensor(f.map, g.map), e.coalgebra().comult));
    }
  }
}

TEST_CASE("cup is associative on kZ2") {
  CompContext ctx(zoo::fixture("z2"), Side::Algebra);
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 40; ++rep) {
    std::size_t d[3];
    Cochain c[3];
    for (int k = 0; k < 3; ++k) {
      d[k] = rng() % 3;
      c[k] = ctx.basis(d[k], rng() % ctx.dim(d[k]));
    }
    CHECK(cup(ctx, cup(ctx, c[0], c[1]), c[2]).map == cup(ctx, c[0], cup(ctx, c[1], c[2])).map);
    CHECK(sqcup(ctx, sqcup(ctx, c[0], c[1]), c[2]).map == sqcup(ctx, c[0], sqcup(ctx, c[1], c[2])).map);
  }
}

TEST_CASE("coalgebra side products") {
  std::mt19937_64 rng(2);
  for (const auto& name : kAll) {
    CompContext ctx(zoo::fixture(name), Side::Coalgebra);
    for (std::size_t m = 0; m <= 2; ++m)
      for (std::size_t n = 0; m + n <= 2; ++n) {
        Cochain f = random_cochain(rng, ctx, m), g = random_cochain(rng, ctx, n);
        CHECK(cup(ctx, f, g).degree == m + n);  // throws if the two routes differ
        CHECK(sqcup(ctx, f, g).degree == m + n);
      }
  }
}

TEST_CASE("pi is the coboundary of the counit cochain") {
  for (const auto& name : kAll) {
    auto e = zoo::fixture(name);
    CompContext alg(e, Side::Algebra);
    Cochain eps = alg.wrap(1, tensor(e.coalgebra().counit_map(), LinearMap::identity(Q, {e.dim_a()})));
    CHECK(coboundary(alg, eps).map == alg.pi().map);
    CompContext co(e, Side::Coalgebra);
    Cochain one = co.wrap(1, tensor(e.algebra().unit_map(), LinearMap::identity(Q, {e.dim_c()})));
    CHECK(coboundary(co, one).map == co.pi().map);
  }
}

TEST_CASE("coboundary squares to zero and matches the complex") {
  for (const std::string name : {"z2", "dual-numbers", "graded-dual"})
    for (Side side : {Side::Algebra, Side::Coalgebra}) {
      CompContext ctx(zoo::fixture(name), side);
      for (std::size_t m = 0; m <= 2; ++m)
        for (std::size_t k = 0; k < ctx.dim(m); ++k) {
          Cochain df = coboundary(ctx, ctx.basis(m, k));  // compares against the complex internally
          CHECK(coboundary(ctx, df).map.matrix().is_zero());
        }
    }
}

TEST_CASE("weak comp axioms on small fixtures") {
  for (const std::string name : {"k", "z2", "trivial-z2", "dual-numbers"})
    for (Side side : {Side::Algebra, Side::Coalgebra}) {
      CAPTURE(name);
      CompContext ctx(zoo::fixture(name), side);
      Report r = verify_weak_comp(ctx, 2);
      for (const auto& c : r.checks) {
        CAPTURE(c.name);
        CAPTURE(c.witness);
        CHECK(c.ok);
        CHECK(c.cases > 0);
      }
    }
}

TEST_CASE("condition (3) fails for a cochain other than pi") {
  CompContext ctx(zoo::fixture("z2"), Side::Algebra);
  std::mt19937_64 rng(4);
  Report r = verify_weak_comp(ctx, 2, random_cochain(rng, ctx, 2));
  REQUIRE(r.first_failure() != nullptr);
  CHECK(r.first_failure()->name.rfind("(3)", 0) == 0);
  CHECK_FALSE(r.first_failure()->witness.empty());
  CHECK_THROWS_AS(verify_weak_comp(ctx, 4), PreconditionError);
}

TEST_CASE("pre-Lie identities with random cochains") {
  std::mt19937_64 rng(9);
  for (const std::string name : {"z2", "dual-numbers", "graded-dual"})
    for (Side side : {Side::Algebra, Side::Coalgebra}) {
      CompContext ctx(zoo::fixture(name), side);
      for (std::size_t m = 0; m <= 2; ++m)
        for (std::size_t n = 0; n <= 2; ++n) {
          Cochain f = random_cochain(rng, ctx, m), g = random_cochain(rng, ctx, n);
          for (int slot = 0; slot < 3; ++slot) {
            Cochain a = slot == 0 ? ctx.pi() : f, b = slot == 1 ? ctx.pi() : g,
                    c = slot == 2 ? ctx.pi() : random_cochain(rng, ctx, 1);
            Report r = check_prelie_identities(ctx, a, b, c);
            CHECK(r.checks.size() == 3);
            for (const auto& x : r.checks) {
              CAPTURE(x.name);
              CHECK(x.ok);
            }
          }
        }
    }
}

TEST_CASE("derivation and homotopy formula exhaustively on kZ2") {
  for (Side side : {Side::Algebra, Side::Coalgebra}) {
    CompContext ctx(zoo::fixture("z2"), side);
    for (const auto& c : check_derivation_exhaustive(ctx, 2).checks) {
      CAPTURE(c.witness);
      CHECK(c.ok);
    }
    for (const auto& c : check_homotopy_formula_exhaustive(ctx, 2).checks) CHECK(c.ok);
  }
}

TEST_CASE("graded commutativity of cohomology classes") {
  for (const std::string name : {"k", "trivial-z2", "dual-numbers", "z2"}) {
    auto e = zoo::fixture(name);
    CompContext ctx(e, Side::Algebra);
    auto cx = complexes::build_CpsiAM(e, algcoalg::regular_bimodule(e.algebra()), 3);
    for (std::size_t m = 0; m <= 1; ++m)
      for (std::size_t n = 0; n + m <= 2; ++n) {
        auto r = graded_commutativity(ctx, cx, m, n);
        CHECK(r.ok());
      }
  }
  auto e = zoo::fixture("trivial-z2");
  auto cx = complexes::build_CpsiAM(e, algcoalg::regular_bimodule(e.algebra()), 2);
  CHECK(graded_commutativity(CompContext(e, Side::Algebra), cx, 0, 0).pairs.size() == 16);
}

TEST_CASE("equivariant cochains") {
  // kZ2 self-entwining: f(c, a¹..aⁿ) must be a multiple of a¹···aⁿ, so dim = 2·2ⁿ.
  CompContext z2(zoo::fixture("z2"), Side::Algebra);
  for (std::size_t n = 0; n <= 2; ++n) CHECK(equivariant_basis(z2, n).size() == 2 * (std::size_t{1} << n));
  CHECK(is_equivariant(z2, z2.pi()));
  CompContext k(zoo::fixture("k"), Side::Algebra);
  for (std::size_t n = 0; n <= 2; ++n) CHECK(equivariant_basis(k, n).size() == k.dim(n));
  for (const auto& c : equivariant_checks(z2, 2).checks) {
    CAPTURE(c.name);
    CHECK(c.ok);
  }
  CHECK(translation_criterion_check(z2, 2).ok());
  CompContext co(zoo::fixture("z2"), Side::Coalgebra);
  CHECK_THROWS_AS(equivariant_basis(co, 1), PreconditionError);
  CHECK_THROWS_AS(translation_criterion_operator(CompContext(zoo::fixture("trivial-z2"), Side::Algebra), 1),
                  PreconditionError);
}
