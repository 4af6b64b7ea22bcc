#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nimrep/cells.hpp"
#include "nimrep/dn_reps.hpp"
#include "nimrep/errors.hpp"

using namespace nimrep;

namespace {

RealMatrix mul(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out(a.size(), std::vector<double>(b[0].size(), 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

double trace(const RealMatrix& m) {
  double t = 0;
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

IntMatrix round_exact(const RealMatrix& m) {
  IntMatrix out(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      const double r = std::round(m[i][j]);
      REQUIRE(std::abs(m[i][j] - r) < 1e-12);
      out(i, j) = static_cast<long long>(r);
    }
  return out;
}

struct Block {
  IntMatrix s, t;
  Decomposition expected;
};

}  // namespace

TEST_CASE("simples") {
  CHECK(simples(4).size() == 5);
  CHECK(simples(3) == std::vector<SimpleModule>{SimpleModule::one_dim(1, 1), SimpleModule::one_dim(-1, -1),
                                                SimpleModule::two_dim(1)});
  const auto six = simples(6);
  CHECK(six.size() == 6);
  CHECK(six[4] == SimpleModule::two_dim(1));
  CHECK(six[5] == SimpleModule::two_dim(2));
  for (int n = 3; n <= 16; ++n) {
    int sum = 0;
    for (const auto& v : simples(n)) sum += v.dimension() * v.dimension();
    CHECK(sum == 2 * n);
  }
  CHECK_THROWS_AS(validate_simple(5, SimpleModule::one_dim(1, -1)), PreconditionError);
  CHECK_THROWS_AS(validate_simple(4, SimpleModule::two_dim(2)), PreconditionError);
  CHECK_THROWS_AS(validate_simple(5, SimpleModule::two_dim(0)), PreconditionError);
  CHECK(parse_simple(4, "V(4,1)") == SimpleModule::two_dim(1));
  CHECK(parse_simple(4, "V(1,-1)") == SimpleModule::one_dim(1, -1));
  CHECK_THROWS(parse_simple(4, "V(5,1)"));
  CHECK(SimpleModule::two_dim(2).name(6) == "V(6,2)");
}

TEST_CASE("generator matrices") {
  const auto m = kl_generator_matrices(4, SimpleModule::two_dim(1));
  CHECK(round_exact(m.s) == IntMatrix{{2, 0}, {0, 0}});
  CHECK(round_exact(m.t) == IntMatrix{{1, 1}, {1, 1}});
  const auto z = kl_generator_matrices(7, SimpleModule::one_dim(-1, -1));
  CHECK(z.s == RealMatrix{{0.0}});
  CHECK(z.t == RealMatrix{{0.0}});

  for (int n = 3; n <= 12; ++n)
    for (const auto& v : simples(n)) {
      const auto g = kl_generator_matrices(n, v);
      for (const RealMatrix* a : {&g.s, &g.t}) {
        const RealMatrix sq = mul(*a, *a);
        for (std::size_t i = 0; i < a->size(); ++i)
          for (std::size_t j = 0; j < a->size(); ++j) CHECK(std::abs(sq[i][j] - 2 * (*a)[i][j]) < 1e-12);
      }
      // tr(s̲) = dim V + χ(s)
      CHECK(std::abs(trace(g.s) - (v.dimension() + character(n, v, 1, true))) < 1e-12);
      CHECK(std::abs(trace(g.t) - (v.dimension() + character(n, v, 1, false))) < 1e-12);
    }
}

TEST_CASE("characters of two-dimensional simples") {
  for (int n = 3; n <= 10; ++n)
    for (int k = 1; 2 * k < n; ++k) {
      const auto v = SimpleModule::two_dim(k);
      for (int m = 0; m <= n; m += 2)
        CHECK(std::abs(character(n, v, m, true) - 2 * std::cos(std::numbers::pi * k * m / n)) < 1e-12);
      CHECK(std::abs(character(n, v, 3, false)) < 1e-12);
    }
}

TEST_CASE("quadratic characteristic polynomials") {
  const auto c41 = char_poly_two_dim(4, 1);
  REQUIRE(c41.integral());
  CHECK(*c41.exact == IntPolynomial{2, -4, 1});
  CHECK(*char_poly_two_dim(3, 1).exact == IntPolynomial{3, -4, 1});
  CHECK(*char_poly_two_dim(6, 1).exact == IntPolynomial{1, -4, 1});
  CHECK_FALSE(char_poly_two_dim(5, 1).integral());
  CHECK_FALSE(char_poly_two_dim(8, 1).integral());
  CHECK(char_poly_two_dim(12, 3).integral());
  CHECK_THROWS_AS(char_poly_two_dim(4, 2), PreconditionError);

  for (int n = 3; n <= 12; ++n)
    for (int k = 1; 2 * k < n; ++k) {
      const auto poly = char_poly_two_dim(n, k);
      const auto g = kl_generator_matrices(n, SimpleModule::two_dim(k));
      RealMatrix q = g.s;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) q[i][j] += g.t[i][j];
      CHECK(std::abs(poly.c1 + trace(q)) < 1e-12);
      CHECK(std::abs(poly.c0 - (q[0][0] * q[1][1] - q[0][1] * q[1][0])) < 1e-12);
      if (poly.integral()) {
        CHECK(poly.exact->coefficient(1) == static_cast<long long>(std::round(-trace(q))));
        CHECK(poly.exact->coefficient(0) == static_cast<long long>(std::round(q[0][0] * q[1][1] - q[0][1] * q[1][0])));
        CHECK(std::abs(poly.c0 - std::round(poly.c0)) < 1e-12);
      }
    }
}

TEST_CASE("decompose cell modules at n=4") {
  const IntMatrix s{{2, 0, 1}, {0, 2, 1}, {0, 0, 0}};
  const IntMatrix t{{0, 0, 0}, {0, 0, 0}, {1, 1, 2}};
  const Decomposition ls = decompose(4, s, t);
  CHECK(ls.multiplicity(SimpleModule::two_dim(1)) == 1);
  CHECK(ls.multiplicity(SimpleModule::one_dim(1, -1)) == 1);
  CHECK(ls.dimension() == 3);
  CHECK(ls.to_string() == "V(1,-1) ⊕ V(4,1)");
  const Decomposition lt = decompose(4, t, s);
  CHECK(lt.to_string() == "V(-1,1) ⊕ V(4,1)");
  CHECK(ls != lt);
  CHECK(decompose(4, IntMatrix{{0}}, IntMatrix{{0}}).to_string() == "V(-1,-1)");
  CHECK(decompose(5, IntMatrix{{2}}, IntMatrix{{2}}).to_string() == "V(1,1)");
}

TEST_CASE("decompose rejects non-modules") {
  try {
    decompose(4, IntMatrix{{1}}, IntMatrix{{0}});
    FAIL("expected NotAModuleError");
  } catch (const NotAModuleError& e) {
    CHECK(e.relation() == "(A_s - I)^2 = I");
  }
  // the n=4 rank 2 pair read at n=5: (st)^5 != I
  try {
    decompose(5, IntMatrix{{2, 2}, {0, 0}}, IntMatrix{{0, 0}, {1, 2}});
    FAIL("expected NotAModuleError");
  } catch (const NotAModuleError& e) {
    CHECK(e.relation() == "((A_s - I)(A_t - I))^5 = I");
  }
  CHECK_THROWS_AS(decompose(4, IntMatrix{{0, 0}, {0, 0}}, IntMatrix{{0}}), PreconditionError);
}

TEST_CASE("regular representation") {
  for (int n = 3; n <= 10; ++n) {
    const KLAlgebra alg(n);
    const Decomposition d =
        decompose(n, alg.left_action(alg.group().generator(Generator::S)), alg.left_action(alg.group().generator(Generator::T)));
    for (const auto& v : simples(n)) CHECK(d.multiplicity(v) == v.dimension());
  }
}

TEST_CASE("decompose is additive over block sums") {
  std::mt19937 rng(20261016);
  for (int n = 3; n <= 8; ++n) {
    const KLAlgebra alg(n);
    const StructureConstantTable table(alg);
    const CellPartition cells = compute_cells(table);

    std::vector<Block> blocks;
    for (const auto& v : simples(n))
      if (v.dimension() == 1) {
        Decomposition d(n);
        d.add(v, 1);
        blocks.push_back({IntMatrix{{1 + v.epsilon}}, IntMatrix{{1 + v.delta}}, d});
      }
    for (std::size_t i = 0; i < cells.left_cells.size(); ++i) {
      const CellModule m = cell_module(table, cells, i);
      blocks.push_back({m.theta_s(), m.theta_t(), decompose(n, m.theta_s(), m.theta_t())});
    }
    Decomposition regular(n);
    for (const auto& v : simples(n)) regular.add(v, v.dimension());
    blocks.push_back({alg.left_action(alg.group().generator(Generator::S)),
                      alg.left_action(alg.group().generator(Generator::T)), regular});

    std::uniform_int_distribution<std::size_t> pick(0, blocks.size() - 1), count(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t parts = count(rng);
      Block sum = blocks[pick(rng)];
      for (std::size_t p = 1; p < parts; ++p) {
        const Block& b = blocks[pick(rng)];
        sum.s = block_diagonal(sum.s, b.s);
        sum.t = block_diagonal(sum.t, b.t);
        sum.expected += b.expected;
      }
      REQUIRE(decompose(n, sum.s, sum.t) == sum.expected);
    }
  }
}
