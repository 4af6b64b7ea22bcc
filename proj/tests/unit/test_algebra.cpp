#include <doctest.h>

#include <random>

#include "nimrep/errors.hpp"
#include "nimrep/group_algebra.hpp"
#include "nimrep/json_io.hpp"
#include "oracles.hpp"

using namespace nimrep;

namespace {

GroupAlgebraElement random_element(const DihedralGroup& g, Basis basis, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  GroupAlgebraElement x(g.n(), basis);
  for (const auto& w : g.all_elements()) x.add(w, coeff(rng));
  return x;
}

}  // namespace

TEST_CASE("KL basis element expands to all shorter elements") {
  const KLAlgebra alg(4);
  const auto& g = alg.group();
  const auto x = alg.kl_to_group(GroupAlgebraElement::basis_vector(g.parse("st"), Basis::KL));
  CHECK(x.to_string() == "st + t + s + e");
  const auto w0 = alg.kl_to_group(GroupAlgebraElement::basis_vector(g.longest_element(), Basis::KL));
  CHECK(w0.terms().size() == 8);
}

TEST_CASE("group to KL basis") {
  const KLAlgebra alg(4);
  const auto& g = alg.group();
  const auto st = alg.group_to_kl(GroupAlgebraElement::basis_vector(g.parse("st"), Basis::GROUP));
  CHECK(oracle::as_words(st) == std::map<std::string, BigInt>{{"st", 1}, {"s", -1}, {"t", -1}, {"e", 1}});
  CHECK(st.to_string() == "st - t - s + e");
  CHECK(alg.group_to_kl(GroupAlgebraElement::basis_vector(g.identity(), Basis::GROUP)).to_string() == "e");
}

TEST_CASE("change of basis round trip on random vectors") {
  std::mt19937 rng(3);
  for (int n = 3; n <= 10; ++n) {
    const KLAlgebra alg(n);
    for (int trial = 0; trial < 500; ++trial) {
      const auto x = random_element(alg.group(), Basis::KL, rng);
      REQUIRE(alg.group_to_kl(alg.kl_to_group(x)) == x);
      const auto y = random_element(alg.group(), Basis::GROUP, rng);
      REQUIRE(alg.kl_to_group(alg.group_to_kl(y)) == y);
    }
  }
}

TEST_CASE("generator action on the KL basis") {
  const KLAlgebra alg(4);
  const auto& g = alg.group();
  CHECK(alg.kl_left_multiply_generator(Generator::S, g.identity()).to_string() == "s");
  CHECK(alg.kl_left_multiply_generator(Generator::S, g.parse("t")).to_string() == "st");
  CHECK(alg.kl_left_multiply_generator(Generator::S, g.parse("ts")).to_string() == "sts + s");
  CHECK(alg.kl_left_multiply_generator(Generator::S, g.parse("s")).to_string() == "2·s");
  CHECK(alg.kl_left_multiply_generator(Generator::S, g.parse("sts")).to_string() == "2·sts");
  CHECK(alg.kl_left_multiply_generator(Generator::T, g.parse("sts")).to_string() == "w0 + ts");
  CHECK(alg.kl_right_multiply_generator(g.parse("st"), Generator::S).to_string() == "sts + s");
}

TEST_CASE("kl_multiply examples") {
  const KLAlgebra alg(4);
  const auto& g = alg.group();
  CHECK(alg.kl_multiply(g.parse("t"), g.parse("st")).to_string() == "tst + t");
  CHECK(alg.kl_multiply(g.parse("s"), g.longest_element()).to_string() == "2·w0");
  CHECK(alg.kl_multiply(g.parse("s"), g.parse("s")).to_string() == "2·s");
  CHECK(alg.kl_multiply(g.identity(), g.parse("tst")).to_string() == "tst");
}

TEST_CASE("both multiplication routes agree with the permutation oracle for n <= 10") {
  for (int n = 3; n <= 10; ++n) {
    const KLAlgebra alg(n);
    const oracle::Dihedral d(n);
    for (const auto& u : alg.group().all_elements())
      for (const auto& w : alg.group().all_elements()) {
        const auto rec = alg.kl_multiply_by_recursion(u, w);
        REQUIRE(rec == alg.kl_multiply_by_convolution(u, w));
        REQUIRE(oracle::as_words(rec) == oracle::kl_product(d, u.to_string(), w.to_string()));
      }
  }
}

TEST_CASE("right multiplication by transport matches convolution") {
  for (int n = 3; n <= 8; ++n) {
    const KLAlgebra alg(n);
    for (const auto& w : alg.group().all_elements())
      for (Generator x : {Generator::S, Generator::T})
        REQUIRE(alg.kl_right_multiply_generator(w, x) ==
                alg.kl_multiply_by_convolution(w, alg.group().generator(x)));
  }
}

TEST_CASE("associativity on random triples") {
  std::mt19937 rng(5);
  for (int n = 3; n <= 8; ++n) {
    const KLAlgebra alg(n);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = random_element(alg.group(), Basis::KL, rng);
      const auto b = random_element(alg.group(), Basis::KL, rng);
      const auto c = random_element(alg.group(), Basis::KL, rng);
      REQUIRE(alg.kl_product(alg.kl_product(a, b), c) == alg.kl_product(a, alg.kl_product(b, c)));
    }
  }
}

TEST_CASE("structure constants are nonnegative for n <= 12") {
  for (int n = 3; n <= 12; ++n) {
    const KLAlgebra alg(n);
    const StructureConstantTable table(alg);
    for (const auto& u : alg.group().all_elements())
      for (const auto& w : alg.group().all_elements())
        for (const auto& [v, c] : table.product(u, w).terms()) REQUIRE(c > 0);
  }
}

TEST_CASE("w0 absorbs with scalar twice the length") {
  // The KL element of u has 2·l(u) terms for u != e, and w·w0 ranges over the whole group.
  for (int n = 3; n <= 10; ++n) {
    const KLAlgebra alg(n);
    const auto w0 = alg.group().longest_element();
    for (const auto& u : alg.group().all_elements()) {
      const BigInt scalar = u.is_identity() ? 1 : 2 * u.length();
      REQUIRE(alg.kl_multiply(u, w0) == GroupAlgebraElement::basis_vector(w0, Basis::KL, scalar));
      REQUIRE(alg.kl_multiply(w0, u) == GroupAlgebraElement::basis_vector(w0, Basis::KL, scalar));
    }
  }
}

TEST_CASE("left action matrices are the columns of products") {
  const KLAlgebra alg(5);
  const auto all = alg.group().all_elements();
  for (const auto& u : all) {
    const IntMatrix& m = alg.left_action(u);
    for (const auto& w : all) {
      const auto p = alg.kl_multiply_by_convolution(u, w);
      for (const auto& v : all) REQUIRE(m(v.index(), w.index()) == p.coefficient(v));
    }
  }
}

TEST_CASE("mixing n or basis is rejected") {
  const KLAlgebra alg(4);
  GroupAlgebraElement a(4, Basis::KL), b(5, Basis::KL), c(4, Basis::GROUP);
  CHECK_THROWS_AS(a += b, PreconditionError);
  CHECK_THROWS_AS(a += c, PreconditionError);
  CHECK_THROWS_AS(alg.kl_to_group(c), PreconditionError);
}

TEST_CASE("algebra element JSON round trip") {
  const KLAlgebra alg(4);
  const auto x = alg.kl_multiply(alg.group().parse("t"), alg.group().parse("st"));
  const Json j = to_json(x);
  CHECK(j.dump() == R"({"n":4,"basis":"KL","coeffs":{"tst":1,"t":1}})");
  CHECK(algebra_element_from_json(nlohmann::json::parse(j.dump())) == x);
}
