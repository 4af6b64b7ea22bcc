#include <doctest.h>

#include <cmath>
#include <random>

#include "nimrep/cells.hpp"
#include "nimrep/errors.hpp"
#include "nimrep/nimrep_engine.hpp"
#include "nimrep/perron.hpp"
#include "oracles.hpp"

using namespace nimrep;

namespace {

const IntMatrix kRank3S{{2, 0, 1}, {0, 2, 1}, {0, 0, 0}};
const IntMatrix kRank3T{{0, 0, 0}, {0, 0, 0}, {1, 1, 2}};
const IntMatrix kRank2S{{2, 2}, {0, 0}};
const IntMatrix kRank2T{{0, 0}, {1, 2}};

CellPartition cells_for(int n) {
  const KLAlgebra alg(n);
  return compute_cells(StructureConstantTable(alg));
}

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("MatrixPair validation") {
  CHECK_THROWS_AS(MatrixPair(2, IntMatrix{{0}}, IntMatrix{{0}}), PreconditionError);
  CHECK_THROWS_AS(MatrixPair(4, IntMatrix{{0}}, IntMatrix{{0, 0}, {0, 0}}), PreconditionError);
  CHECK_THROWS_AS(MatrixPair(4, IntMatrix{{-1}}, IntMatrix{{0}}), PreconditionError);
  CHECK_THROWS_AS(MatrixPair(4, IntMatrix(0, 0), IntMatrix(0, 0)), PreconditionError);
  const MatrixPair p(4, kRank3S, kRank3T);
  CHECK(p.rank() == 3);
  CHECK(p.q() == IntMatrix{{2, 0, 1}, {0, 2, 1}, {1, 1, 2}});
  CHECK(p.swapped().theta_s == kRank3T);
  CHECK(p.permuted({1, 0, 2}) == MatrixPair(4, kRank3S, kRank3T));
}

TEST_CASE("extend: rank 3 pair at n=4") {
  const MatrixPair p(4, kRank3S, kRank3T);
  const auto result = extend(p);
  REQUIRE(std::holds_alternative<ExtendedRep>(result));
  const auto& rep = std::get<ExtendedRep>(result);
  const DihedralGroup g(4);
  CHECK(rep.matrix(g.parse("sts")) == IntMatrix{{0, 2, 1}, {2, 0, 1}, {0, 0, 0}});
  CHECK(rep.matrix(g.longest_element()).is_zero());
  CHECK(rep.matrix(g.identity()) == IntMatrix::identity(3));
  CHECK(rep.matrix(g.parse("st")) == kRank3S * kRank3T);
}

TEST_CASE("extend: rank 2 pair at n=4") {
  const auto result = extend(MatrixPair(4, kRank2S, kRank2T));
  REQUIRE(std::holds_alternative<ExtendedRep>(result));
  const auto& rep = std::get<ExtendedRep>(result);
  const DihedralGroup g(4);
  CHECK(rep.matrix(g.parse("tst")) == kRank2T);
  CHECK(rep.matrix(g.longest_element()).is_zero());
  for (const auto& m : rep.family) CHECK(m.is_nonnegative());
}

TEST_CASE("extend: scalar 2") {
  const auto result = extend(MatrixPair(4, IntMatrix{{2}}, IntMatrix{{2}}));
  REQUIRE(std::holds_alternative<ExtendedRep>(result));
  const auto& rep = std::get<ExtendedRep>(result);
  for (const auto& w : DihedralGroup(4).all_elements())
    CHECK(rep.matrix(w) == IntMatrix{{w.is_identity() ? 1 : 2 * w.length()}});
  CHECK(rep.matrix(DihedralGroup(4).longest_element()) == IntMatrix{{8}});
}

TEST_CASE("extend: negative entry is reported") {
  const auto result = extend(MatrixPair(4, IntMatrix{{2}}, IntMatrix{{0}}));
  REQUIRE(std::holds_alternative<ExtendFailure>(result));
  const auto& f = std::get<ExtendFailure>(result);
  CHECK(f.filter == FilterId::F2);
  CHECK(f.element.to_string() == "sts");
  CHECK(f.raw_family.size() == 8);
  CHECK(f.raw_family[f.element.index()] == IntMatrix{{-2}});
}

TEST_CASE("extend reproduces every cell module for n <= 10") {
  for (int n = 3; n <= 10; ++n) {
    const KLAlgebra alg(n);
    const StructureConstantTable table(alg);
    const CellPartition cells = compute_cells(table);
    for (std::size_t i = 0; i < cells.left_cells.size(); ++i) {
      const CellModule m = cell_module(table, cells, i);
      const auto result = extend(MatrixPair(n, m.theta_s(), m.theta_t()));
      REQUIRE(std::holds_alternative<ExtendedRep>(result));
      CHECK(std::get<ExtendedRep>(result).family == m.matrices);
    }
  }
}

TEST_CASE("extend commutes with the s/t swap") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(0, 2);
  for (int n = 3; n <= 7; ++n) {
    const DihedralGroup g(n);
    for (int trial = 0; trial < 100; ++trial) {
      IntMatrix s(2, 2), t(2, 2);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          s(i, j) = entry(rng);
          t(i, j) = entry(rng);
        }
      const MatrixPair p(n, s, t);
      const auto a = extend(p);
      const auto b = extend(p.swapped());
      REQUIRE(a.index() == b.index());
      if (const auto* ra = std::get_if<ExtendedRep>(&a)) {
        const auto& rb = std::get<ExtendedRep>(b);
        for (const auto& w : g.all_elements()) CHECK(rb.matrix(swap_generators(g, w)) == ra->matrix(w));
      }
    }
  }
}

TEST_CASE("F1 idempotent") {
  CHECK(check_idempotent(MatrixPair(4, kRank2S, kRank2T)).status == FilterStatus::PASS);
  const IntMatrix ones{{1, 1}, {1, 1}};
  CHECK(check_idempotent(MatrixPair(4, ones, ones)).status == FilterStatus::PASS);
  const auto r = check_idempotent(MatrixPair(4, IntMatrix::identity(2), kRank2T));
  CHECK(r.status == FilterStatus::FAIL);
  CHECK(contains(r.detail, "A_s^2 != 2A_s"));
}

TEST_CASE("F3 transitive") {
  const IntMatrix zero(2, 2);
  CHECK(check_transitive(MatrixPair(4, IntMatrix{{2, 0}, {0, 2}}, zero)).status == FilterStatus::FAIL);
  CHECK(check_transitive(MatrixPair(4, kRank3S, kRank3T)).status == FilterStatus::PASS);
  const auto r = check_transitive(MatrixPair(4, IntMatrix{{2, 1}, {0, 2}}, zero));
  CHECK(r.status == FilterStatus::FAIL);
  CHECK(contains(r.detail, "no path 1→2"));
  CHECK(missing_path(IntMatrix{{0, 1}, {1, 0}}) == std::nullopt);
}

TEST_CASE("F6 group relations") {
  CHECK(check_group_relations(MatrixPair(4, kRank2S, kRank2T)).status == FilterStatus::PASS);
  CHECK(check_group_relations(MatrixPair(4, kRank3S, kRank3T)).status == FilterStatus::PASS);
  CHECK(check_group_relations(MatrixPair(5, kRank2S, kRank2T)).status == FilterStatus::FAIL);
  // (st)^2 = -I for the rank 2 pair
  const IntMatrix st = (kRank2S - IntMatrix::identity(2)) * (kRank2T - IntMatrix::identity(2));
  CHECK(st.pow(2) == IntMatrix::identity(2) * BigInt(-1));
}

TEST_CASE("F7 block form") {
  const auto r3 = check_L3_form(MatrixPair(4, kRank3S, kRank3T));
  CHECK(r3.status == FilterStatus::PASS);
  CHECK(r3.detail == "S={1,2}, T={3}");
  const auto r2 = check_L3_form(MatrixPair(4, kRank2S, kRank2T));
  CHECK(r2.status == FilterStatus::PASS);
  CHECK(r2.detail == "S={1}, T={2}");
  const IntMatrix ones{{1, 1}, {1, 1}};
  const auto bad = check_L3_form(MatrixPair(4, ones, ones));
  CHECK(bad.status == FilterStatus::FAIL);
  CHECK(contains(bad.detail, "diagonal entry 1"));
  for (long long a : {0, 2})
    for (long long b : {0, 2}) CHECK(check_L3_form(MatrixPair(4, IntMatrix{{a}}, IntMatrix{{b}})).passed());
  CHECK_FALSE(check_L3_form(MatrixPair(4, IntMatrix{{1}}, IntMatrix{{0}})).passed());
}

TEST_CASE("F4 apex support") {
  {
    const auto cells = cells_for(3);
    const auto rep = std::get<ExtendedRep>(extend(MatrixPair(3, IntMatrix{{2, 1}, {0, 0}}, IntMatrix{{0, 0}, {1, 2}})));
    const auto a = check_apex_support(cells, rep);
    CHECK(a.result.status == FilterStatus::PASS);
    CHECK(a.apex == std::optional<std::size_t>(1));
  }
  {
    const auto cells = cells_for(4);
    const auto rep = std::get<ExtendFailure>(extend(MatrixPair(4, IntMatrix{{2}}, IntMatrix{{0}})));
    const auto a = check_apex_support(cells, rep.raw_family);
    CHECK(a.result.status == FilterStatus::FAIL);
    CHECK(a.result.detail == "A_t = 0 but A_s != 0 inside J2");
  }
  {
    const auto cells = cells_for(6);
    const auto ev = evaluate_filters(MatrixPair(6, IntMatrix{{2, 1}, {0, 0}}, IntMatrix{{0, 0}, {1, 2}}), cells);
    CHECK(ev.report.at(FilterId::F4).status == FilterStatus::FAIL);
    CHECK(ev.report.at(FilterId::F4).detail == "A_sts = 0 but A_s != 0 inside J2");
  }
}

TEST_CASE("evaluate_filters") {
  const auto cells = cells_for(4);
  const auto ok = evaluate_filters(MatrixPair(4, kRank3S, kRank3T), cells);
  CHECK(ok.report.passed());
  CHECK(ok.report.results.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) CHECK(ok.report.results[i].id == kFilterOrder[i]);
  CHECK(ok.extended.has_value());
  CHECK(ok.apex == std::optional<std::size_t>(1));

  const IntMatrix ones{{1, 1}, {1, 1}};
  const auto stop = evaluate_filters(MatrixPair(4, ones, ones), cells, {}, true);
  CHECK(stop.report.first_failure() == FilterId::F7);
  CHECK(stop.report.results.size() == 2);
  CHECK_FALSE(stop.extended.has_value());

  FilterSelection no_f7;
  no_f7.set(FilterId::F7, false);
  const auto open = evaluate_filters(MatrixPair(4, ones, ones), cells, no_f7);
  CHECK(open.report.passed());
  CHECK(open.report.at(FilterId::F7).status == FilterStatus::SKIPPED);

  CHECK(to_string(FilterId::F4) == "F4");
  CHECK(parse_filter_id("F6") == FilterId::F6);
  CHECK_THROWS_AS(parse_filter_id("F9"), ParseError);
}

TEST_CASE("global annihilators") {
  const IntPolynomial p4{0, -4, 10, -6, 1};
  CHECK(global_annihilator(4, 1) == p4);
  CHECK(global_annihilator(4, 2) == IntPolynomial::linear(4) * p4);
  CHECK(global_annihilator(3, 1) == IntPolynomial::x() * IntPolynomial::linear(1) * IntPolynomial::linear(3));
  CHECK(global_annihilator(4, 0) == IntPolynomial::x());

  // Independent route: squarefree part of det(x - (s̲+t̲)) on the regular module.
  for (int n = 3; n <= 8; ++n) {
    const KLAlgebra alg(n);
    const IntMatrix q = alg.left_action(alg.group().generator(Generator::S)) +
                        alg.left_action(alg.group().generator(Generator::T));
    const IntPolynomial full = global_annihilator(n, 2);
    for (long long x = -3; x <= 8; ++x) {
      const BigInt value = oracle::char_poly_at(q, x);
      CHECK((value == 0) == (full.evaluate(BigInt(x)) == 0));
    }
  }
}

TEST_CASE("annihilator checks") {
  const IntPolynomial p4 = global_annihilator(4, 1);
  CHECK(annihilator_check(MatrixPair(4, kRank3S, kRank3T).q(), p4).vanishes);
  CHECK(annihilator_check(IntMatrix{{2, 2}, {1, 2}}, p4).vanishes);
  CHECK(annihilator_check(IntMatrix{{2, 0}, {0, 2}}, p4).vanishes);
  CHECK_FALSE(annihilator_check(IntMatrix{{4}}, p4).vanishes);

  for (int n = 3; n <= 10; ++n) {
    const KLAlgebra alg(n);
    const StructureConstantTable table(alg);
    const CellPartition cells = compute_cells(table);
    const IntPolynomial p = global_annihilator(alg, cells, 1);
    for (std::size_t i = 0; i < cells.left_cells.size(); ++i) {
      const CellModule m = cell_module(table, cells, i);
      const bool low = cells.two_sided_cell_of(m.basis.front()) <= 1;
      CHECK(annihilator_check(m.theta_s() + m.theta_t(), p).vanishes == low);
    }
  }
}

TEST_CASE("determinant identity") {
  using V = std::vector<BigInt>;
  const auto a = det_identity(V{1, 1}, V{1}, V{1}, V{1, 1});
  CHECK(a.direct == 4);
  CHECK(a.formula == 4);
  CHECK(a.q == IntMatrix{{2, 0, 1}, {0, 2, 1}, {1, 1, 2}});
  const auto b = det_identity(V{1, 1}, V{1, 1}, V{1, 1}, V{1, 1});
  CHECK(b.direct == 0);
  CHECK(b.formula == 0);
  const auto c = det_identity(V{1}, V{1}, V{2}, V{2});
  CHECK(c.direct == 0);
  CHECK(c.formula == 0);
  CHECK_THROWS_AS(det_identity(V{2}, V{1}, V{1}, V{1}), PreconditionError);
  CHECK_THROWS_AS(det_identity(V{1}, V{1}, V{0}, V{1}), PreconditionError);
  CHECK_THROWS_AS(det_identity(V{1, 1}, V{1}, V{1}, V{1}), PreconditionError);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> size(1, 4), entry(1, 5);
  auto draw = [&](std::size_t len, bool unit_first) {
    V out(len);
    for (auto& x : out) x = entry(rng);
    if (unit_first) out[0] = 1;
    return out;
  };
  for (int i = 0; i < 1000; ++i) {
    const std::size_t k = size(rng), l = size(rng);
    const auto lambda = draw(k, true), w = draw(k, false), mu = draw(l, true), v = draw(l, false);
    const auto d = det_identity(lambda, mu, v, w);
    REQUIRE(d.direct == d.formula);
    REQUIRE(oracle::determinant(d.q) == d.direct);
  }
}

TEST_CASE("perron analysis") {
  const auto a = perron_analysis(MatrixPair(4, kRank3S, kRank3T).q());
  CHECK(a.irreducible);
  CHECK(std::abs(a.spectral_radius - (2 + std::sqrt(2.0))) < 1e-9);
  CHECK(a.top_eigenvalue_simple);
  CHECK(a.positive_eigenvector);
  REQUIRE(a.eigenvalues.size() == 3);
  const double expected[] = {2 - std::sqrt(2.0), 2, 2 + std::sqrt(2.0)};
  for (int i = 0; i < 3; ++i) CHECK(std::abs(a.eigenvalues[i] - expected[i]) < 1e-9);

  const auto swap = perron_analysis(IntMatrix{{0, 1}, {1, 0}});
  CHECK(swap.irreducible);
  CHECK(std::abs(swap.spectral_radius - 1) < 1e-9);
  CHECK(swap.top_eigenvalue_simple);
  CHECK(std::abs(swap.eigenvector[0] - 0.5) < 1e-9);
  CHECK(std::abs(swap.eigenvector[1] - 0.5) < 1e-9);

  CHECK_FALSE(perron_analysis(IntMatrix{{2, 0}, {0, 2}}).irreducible);
  CHECK_FALSE(perron_analysis(IntMatrix{{2, 0}, {0, 2}}).top_eigenvalue_simple);

  const auto roots = polynomial_roots(IntPolynomial{2, -4, 1});
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0] - (2 - std::sqrt(2.0))) < 1e-12);
}
