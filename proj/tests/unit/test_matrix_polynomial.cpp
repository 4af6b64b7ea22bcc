#include <doctest.h>

#include <cmath>
#include <random>

#include "nimrep/errors.hpp"
#include "nimrep/int_matrix.hpp"
#include "nimrep/polynomial.hpp"
#include "oracles.hpp"

using namespace nimrep;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("matrix arithmetic basics") {
  const IntMatrix a{{1, 2}, {3, 4}};
  const IntMatrix b{{0, 1}, {1, 0}};
  CHECK(a * b == IntMatrix{{2, 1}, {4, 3}});
  CHECK(a + b == IntMatrix{{1, 3}, {4, 4}});
  CHECK(a - a == IntMatrix::zero(2, 2));
  CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
  CHECK(a.trace() == 5);
  CHECK(a.pow(0) == IntMatrix::identity(2));
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.to_string() == "[[1,2],[3,4]]");
  CHECK(block_diagonal(a, IntMatrix{{7}}) == IntMatrix{{1, 2, 0}, {3, 4, 0}, {0, 0, 7}});
  CHECK(a.permuted({1, 0}) == IntMatrix{{4, 3}, {2, 1}});
  CHECK_FALSE(IntMatrix{{0, -1}}.is_nonnegative());
}

TEST_CASE("entries do not overflow") {
  const IntMatrix two{{2}};
  CHECK(two.pow(200)(0, 0) == BigInt(1) << 200);
}

TEST_CASE("Bareiss determinant agrees with elimination over the rationals") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const IntMatrix m = random_matrix(rng, n, -6, 6);
    REQUIRE(determinant(m) == oracle::determinant(m));
  }
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{2, 2}, {2, 2}}) == 0);
}

TEST_CASE("characteristic polynomial agrees with det(xI - M) at integer points") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const IntMatrix m = random_matrix(rng, n, -4, 4);
    const IntPolynomial p = characteristic_polynomial(m);
    REQUIRE(p.degree() == static_cast<int>(n));
    for (long long x = -3; x <= 3; ++x) REQUIRE(p.evaluate(BigInt(x)) == oracle::char_poly_at(m, x));
    REQUIRE(p.evaluate(m).is_zero());
  }
}

TEST_CASE("polynomial printing and parsing") {
  const IntPolynomial p({0, -4, 10, -6, 1});
  CHECK(p.to_string() == "x^4 - 6x^3 + 10x^2 - 4x");
  CHECK(IntPolynomial::parse("x^4 - 6x^3 + 10x^2 - 4x") == p);
  CHECK(IntPolynomial::parse("-x + 2") == IntPolynomial({2, -1}));
  CHECK(IntPolynomial::parse("3*x^2") == IntPolynomial({0, 0, 3}));
  CHECK(IntPolynomial({5}).to_string() == "5");
  CHECK(IntPolynomial().to_string() == "0");
  CHECK_THROWS_AS(IntPolynomial::parse("x^^2"), ParseError);
  CHECK_THROWS_AS(IntPolynomial::parse(""), ParseError);
}

TEST_CASE("exact division, gcd and squarefree part") {
  const IntPolynomial a = IntPolynomial::linear(2) * IntPolynomial::linear(2) * IntPolynomial::x();
  CHECK(divide_exact(a, IntPolynomial::linear(2)) == IntPolynomial::linear(2) * IntPolynomial::x());
  CHECK_THROWS_AS(divide_exact(a, IntPolynomial::linear(3)), InternalError);
  CHECK(gcd(a, a.derivative()) == IntPolynomial::linear(2));
  CHECK(squarefree_part(a) == IntPolynomial::linear(2) * IntPolynomial::x());
  const IntPolynomial q({2, -4, 1});  // x^2 - 4x + 2, irreducible
  CHECK(squarefree_part(q * q * IntPolynomial::x()) == q * IntPolynomial::x());
  CHECK(gcd(q, IntPolynomial::linear(1)) == IntPolynomial({1}));
}

TEST_CASE("evaluation at doubles and matrices") {
  const IntPolynomial q({2, -4, 1});
  CHECK(std::abs(q.evaluate(2.0 + std::sqrt(2.0))) < 1e-12);
  const IntMatrix m{{2, 2}, {1, 2}};
  CHECK(q.evaluate(m).is_zero());
}
