#include <random>

#include "doctest.h"
#include "entwine/errors.hpp"
#include "entwine/exactla/linalg.hpp"

using namespace entwine;
using namespace entwine::exactla;

namespace {

const FieldSpec Q;

Vector vec(std::initializer_list<long> xs, const FieldSpec& f = Q) {
  Vector v;
  for (long x : xs) v.emplace_back(f, x);
  return v;
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, const FieldSpec& f = Q) {
  std::vector<Scalar> xs;
  for (std::size_t i = 0; i < r * c; ++i) xs.emplace_back(f, static_cast<long>(rng() % 7) - 3);
  return Matrix::from_dense(f, r, c, xs);
}

}  // namespace

TEST_CASE("scalars normalise and keep their field") {
  CHECK(Scalar::parse(Q, "6/4").to_string() == "3/2");
}

TEST_CASE("scalar parsing rejects junk and zero denominators") {
  CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse(Q, "abc"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse(Q, ""), std::invalid_argument);
  CHECK(Scalar::parse(Q, "+5").to_string() == "5");
}

TEST_CASE("prime field arithmetic") {
  FieldSpec f7 = FieldSpec::prime(7);
  Scalar a(f7, 3), b(f7, 5);
  CHECK((a + b).residue() == 1);
  CHECK((a * b).residue() == 1);
  CHECK((a / b * b) == a);
  CHECK(Scalar(f7, -1).residue() == 6);
  CHECK(Scalar::parse(f7, "1/2").residue() == 4);
  CHECK_THROWS(Scalar::parse(f7, "1/7"));
  CHECK_THROWS(FieldSpec::prime(8));
  CHECK(FieldSpec::parse("Fp:10007").characteristic() == 10007);
  CHECK(FieldSpec::parse("Q").is_rational());
  CHECK_THROWS(FieldSpec::parse("R"));
}

TEST_CASE("mixing fields throws") {
  FieldSpec f5 = FieldSpec::prime(5), f7 = FieldSpec::prime(7);
  CHECK_THROWS_AS(Scalar(f5, 1) + Scalar(f7, 1), FieldMismatchError);
  CHECK_THROWS_AS(Scalar(Q, 1) * Scalar(f7, 1), FieldMismatchError);
  CHECK_THROWS_AS(Matrix::identity(Q, 2) * Matrix::identity(f5, 2), FieldMismatchError);
  CHECK_THROWS_AS(kron(Matrix::identity(Q, 2), Matrix::identity(f5, 2)), FieldMismatchError);
}

TEST_CASE("rank") {
  CHECK(rank(Matrix::identity(Q, 2)) == 2);
  CHECK(rank(Matrix(Q, 2, 2)) == 0);
  CHECK(rank(Matrix::from_ints(Q, {{1, 2}, {2, 4}})) == 1);
  // same matrix mod 2 collapses further
  CHECK(rank(Matrix::from_ints(FieldSpec::prime(2), {{1, 1}, {1, 1}, {0, 0}})) == 1);
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(Matrix::identity(Q, 3)).empty());
  auto z = kernel_basis(Matrix(Q, 2, 3));
  REQUIRE(z.size() == 3);
  CHECK(z[0] == vec({1, 0, 0}));
  CHECK(z[2] == vec({0, 0, 1}));
  auto k = kernel_basis(Matrix::from_ints(Q, {{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == vec({-1, 1}));
}

TEST_CASE("image basis") {
  CHECK(image_basis(Matrix::identity(Q, 2)).size() == 2);
  CHECK(image_basis(Matrix(Q, 3, 2)).empty());
  auto im = image_basis(Matrix::from_ints(Q, {{1, 2}, {2, 4}}));
  REQUIRE(im.size() == 1);
  CHECK(im[0] == vec({1, 2}));
}

TEST_CASE("solve") {
  auto b = vec({4, -7});
  CHECK(*solve(Matrix::identity(Q, 2), b) == b);
  CHECK_FALSE(solve(Matrix(Q, 2, 2), b).has_value());
  auto x = solve(Matrix::from_ints(Q, {{2}}), vec({1}));
  REQUIRE(x);
  CHECK((*x)[0] == Scalar::parse(Q, "1/2"));
  CHECK_THROWS_AS(solve(Matrix::identity(Q, 2), vec({1})), ShapeError);
}

TEST_CASE("quotient with projection") {
  SUBCASE("sub equals big") {
    auto q = quotient_with_projection({vec({1, 0})}, {vec({1, 0})}, 2);
    CHECK(q.dim() == 0);
    CHECK(q.reduce(vec({5, 0})).empty());
  }
  SUBCASE("empty sub") {
    auto q = quotient_with_projection({}, {vec({1})}, 1);
    REQUIRE(q.dim() == 1);
    CHECK(q.reduce(vec({1})) == vec({1}));
  }
  SUBCASE("echelon completion") {
    auto q = quotient_with_projection({vec({1, 0})}, {vec({1, 0}), vec({0, 1})}, 2);
    REQUIRE(q.dim() == 1);
    CHECK(q.class_basis()[0] == vec({0, 1}));
    CHECK(q.reduce(vec({3, 5})) == vec({5}));
  }
  SUBCASE("containment violation") {
    CHECK_THROWS_AS(quotient_with_projection({vec({0, 1})}, {vec({1, 0})}, 2), InconsistentQuotientError);
  }
  SUBCASE("vector outside span(big)") {
    auto q = quotient_with_projection({}, {vec({1, 0})}, 2);
    CHECK_THROWS_AS(q.reduce(vec({0, 1})), InconsistentQuotientError);
  }
}

TEST_CASE("kron") {
  CHECK(kron(Matrix::identity(Q, 2), Matrix::identity(Q, 2)) == Matrix::identity(Q, 4));
  auto a = Matrix::from_ints(Q, {{1, 2}, {3, 4}});
  CHECK(kron(a, Matrix::from_ints(Q, {{5}})) == a.scaled(Scalar(Q, 5)));
  // leftmost factor most significant
  auto b = Matrix::from_ints(Q, {{0, 1}, {1, 0}});
  CHECK(kron(a, b).at(1, 0) == Scalar(Q, 1));  // a[0,0] b[1,0]
  CHECK(kron(a, b).at(2, 1) == Scalar(Q, 3));  // a[1,0] b[0,1]
}

TEST_CASE("kron mixed product on random inputs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2), c = random_matrix(rng, 2, 2),
         d = random_matrix(rng, 2, 2);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
  }
}

TEST_CASE("rank-nullity and kernel vectors on random matrices") {
  std::mt19937_64 rng(5);
  for (const FieldSpec& f : {Q, FieldSpec::prime(3)}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      auto m = random_matrix(rng, r, c, f);
      // make some rows dependent
      if (r > 2) {
        m.set_row(r - 1, m.row(0));
      }
      auto ker = kernel_basis(m);
      CHECK(rank(m) + ker.size() == c);
      for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
      CHECK(rank(m) == rank(m.transpose()));
      CHECK(image_basis(m).size() == rank(m));
    }
  }
}

TEST_CASE("solve agrees with apply") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_matrix(rng, 4, 3);
    Vector x0;
    for (int i = 0; i < 3; ++i) x0.emplace_back(Q, static_cast<long>(rng() % 5));
    auto b = m.apply(x0);
    auto x = solve(m, b);
    REQUIRE(x);
    CHECK(m.apply(*x) == b);
  }
}

TEST_CASE("exact recomputation is bit-identical") {
  std::mt19937_64 rng(3);
  auto m = random_matrix(rng, 5, 5);
  auto k1 = kernel_basis(m * m.transpose());
  auto k2 = kernel_basis(m * m.transpose());
  CHECK(k1 == k2);
}
