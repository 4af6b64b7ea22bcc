#include <doctest.h>

#include "nimrep/dihedral.hpp"
#include "nimrep/errors.hpp"
#include "oracles.hpp"

using namespace nimrep;

namespace {

std::vector<Generator> letters(const std::string& w) {
  std::vector<Generator> out;
  for (char c : w) out.push_back(c == 's' ? Generator::S : Generator::T);
  return out;
}

std::string word(const GroupElement& g) {
  std::string out;
  for (auto x : g.reduced_word()) out += to_char(x);
  return out;
}

}  // namespace

TEST_CASE("construction rejects n below 3") {
  CHECK_THROWS_AS(DihedralGroup(2), PreconditionError);
  CHECK_THROWS_AS(DihedralGroup(0), PreconditionError);
  CHECK_NOTHROW(DihedralGroup(3));
}

TEST_CASE("element indices follow length then leading letter") {
  const DihedralGroup g(4);
  const auto all = g.all_elements();
  REQUIRE(all.size() == 8);
  const char* names[] = {"e", "s", "t", "st", "ts", "sts", "tst", "w0"};
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(all[i].index() == i);
    CHECK(all[i].to_string() == names[i]);
    CHECK(g.element_at(i) == all[i]);
  }
  CHECK(g.longest_element().length() == 4);
  CHECK(g.longest_element().leading() == Leading::S);
}

TEST_CASE("words reduce by the braid relation") {
  const DihedralGroup g(4);
  CHECK(g.element_from_word(letters("ss")).is_identity());
  CHECK(g.element_from_word(letters("stst")).is_longest());
  CHECK(g.element_from_word(letters("tsts")).is_longest());
  CHECK(g.element_from_word(letters("ststs")).to_string() == "tst");
  CHECK(g.element_from_word(letters("sttst")) == g.parse("sst"));
  CHECK(g.parse("sst").to_string() == "t");
}

TEST_CASE("multiplication matches the permutation model for n <= 12") {
  for (int n = 3; n <= 12; ++n) {
    const DihedralGroup g(n);
    std::map<std::size_t, oracle::Perm> perm;
    for (const auto& a : g.all_elements()) perm[a.index()] = oracle::word_perm(n, word(a));
    std::set<oracle::Perm> distinct;
    for (const auto& [i, p] : perm) distinct.insert(p);
    CHECK(distinct.size() == 2 * static_cast<std::size_t>(n));
    for (const auto& a : g.all_elements())
      for (const auto& b : g.all_elements())
        REQUIRE(perm[g.multiply(a, b).index()] == oracle::compose(perm[a.index()], perm[b.index()]));
  }
}

TEST_CASE("group axioms for n <= 12") {
  for (int n = 3; n <= 12; ++n) {
    const DihedralGroup g(n);
    const auto all = g.all_elements();
    const auto e = g.identity();
    for (const auto& a : all) {
      CHECK(g.multiply(a, e) == a);
      CHECK(g.multiply(e, a) == a);
      CHECK(g.multiply(a, g.inverse(a)).is_identity());
      CHECK(g.inverse(g.inverse(a)) == a);
      CHECK(a.length() == static_cast<int>(a.reduced_word().size()));
    }
    if (n <= 8) {
      for (const auto& a : all)
        for (const auto& b : all)
          for (const auto& c : all) REQUIRE(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
    }
    const auto st = g.multiply(g.generator(Generator::S), g.generator(Generator::T));
    GroupElement power = e;
    for (int k = 1; k <= n; ++k) {
      power = g.multiply(power, st);
      CHECK(power.is_identity() == (k == n));
    }
  }
}

TEST_CASE("inverse reverses the reduced word") {
  const DihedralGroup g(5);
  CHECK(g.inverse(g.parse("st")).to_string() == "ts");
  CHECK(g.inverse(g.parse("sts")).to_string() == "sts");
  CHECK(g.inverse(g.longest_element()).is_longest());
}

TEST_CASE("generator multiplication on either side") {
  const DihedralGroup g(4);
  CHECK(g.multiply_left(Generator::S, g.parse("ts")).to_string() == "sts");
  CHECK(g.multiply_left(Generator::S, g.parse("sts")).to_string() == "ts");
  CHECK(g.multiply_right(g.parse("st"), Generator::S).to_string() == "sts");
  CHECK(g.multiply_right(g.parse("tst"), Generator::S).is_longest());
}

TEST_CASE("bruhat order is by length in the dihedral case") {
  const DihedralGroup g(4);
  CHECK(g.bruhat_lt(g.parse("s"), g.parse("ts")));
  CHECK(g.bruhat_lt(g.identity(), g.parse("t")));
  CHECK_FALSE(g.bruhat_lt(g.parse("st"), g.parse("ts")));
  CHECK_FALSE(g.bruhat_lt(g.longest_element(), g.parse("s")));
}

TEST_CASE("parse accepts e, 1, w0 and words and reports positions") {
  const DihedralGroup g(6);
  CHECK(g.parse("e").is_identity());
  CHECK(g.parse("1").is_identity());
  CHECK(g.parse("w0").is_longest());
  CHECK(g.parse("tststs").is_longest());
  try {
    g.parse("stx");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(g.parse(""), ParseError);
}

TEST_CASE("swapping generators is an involution that fixes w0") {
  const DihedralGroup g(5);
  for (const auto& a : g.all_elements()) {
    CHECK(swap_generators(g, swap_generators(g, a)) == a);
    CHECK(swap_generators(g, a).length() == a.length());
  }
  CHECK(swap_generators(g, g.parse("st")).to_string() == "ts");
  CHECK(swap_generators(g, g.longest_element()).is_longest());
}
