#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracle/oracle.hpp"
#include "sc/constructor.hpp"
#include "sc/dsubstring.hpp"

using namespace sc;

namespace {

oracle::Seq seq(std::span<const Symbol> s) { return {s.begin(), s.end()}; }

std::uint64_t k1(std::span<const Symbol> s) { return oracle::substrings(seq(s)); }

std::vector<std::string> texts(const std::vector<PatternWord>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(render(w.symbols()));
  return out;
}

}  // namespace

TEST_CASE("max_complexity") {
  CHECK(max_complexity(2, 4) == BigCount{8u});
  CHECK(k1(word_from_text("abaa").symbols()) == 8);
  CHECK(max_complexity(1, 5) == BigCount{5u});
  CHECK(max_complexity(26, 6) == BigCount{21u});
  CHECK(max_complexity(2, 3) == BigCount{5u});
  CHECK_THROWS_AS(max_complexity(0, 3), DomainError);
  CHECK_THROWS_AS(max_complexity(2, 0), DomainError);
}

TEST_CASE("max_complexity is attained and never beaten for k <= 8, n <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 8; ++k) {
      std::uint64_t best = 0;
      oracle::for_each_pattern(k, n, [&](const oracle::Seq& w) { best = std::max(best, oracle::substrings(w)); });
      CHECK(BigCount{best} == max_complexity(n, k));
    }
  }
}

TEST_CASE("recipes render the expected words") {
  CHECK(ConstructionRecipe(RecipeFamily::PowerThenLetter, 5).text() == "aaaab");
  CHECK(ConstructionRecipe(RecipeFamily::PowerBracketed, 6).text() == "abbbaa");
  CHECK(ConstructionRecipe(RecipeFamily::ThreeThenPower, 5).text() == "abcdd");
  CHECK(ConstructionRecipe(RecipeFamily::BinaryTailEven, 10).text() == "abbbabbabb");
  CHECK(ConstructionRecipe(RecipeFamily::BinaryTailOdd, 10).text() == "abbbababba");
  CHECK(ConstructionRecipe(RecipeFamily::Fourteen, 6).text() == "abbbba");
  CHECK(ConstructionRecipe(RecipeFamily::TwentySix, 8).text() == "abbbbaab");
  // ab^6a only reaches 20
  CHECK(k1(word_from_text("abbbbbba").symbols()) == 20);
  CHECK(ConstructionRecipe(RecipeFamily::Thirty, 9).text() == "abbbbbaba");
  CHECK(ConstructionRecipe(RecipeFamily::Trivial, 3).text() == "aaa");

  CHECK(ConstructionRecipe(RecipeFamily::PowerBracketed, 6).claimed_complexity() == BigCount{16u});
  CHECK(ConstructionRecipe(RecipeFamily::BinaryTailEven, 10).claimed_complexity() == BigCount{34u});
  CHECK(ConstructionRecipe(RecipeFamily::BinaryTailOdd, 10).claimed_complexity() == BigCount{38u});

  CHECK_THROWS_AS(ConstructionRecipe(RecipeFamily::PowerBracketed, 3), DomainError);
  CHECK_THROWS_AS(ConstructionRecipe(RecipeFamily::BinaryTailEven, 9), DomainError);
  CHECK_THROWS_AS(ConstructionRecipe(RecipeFamily::Fourteen, 7), DomainError);
  CHECK_THROWS_AS(ConstructionRecipe(RecipeFamily::Trivial, 0), DomainError);
}

TEST_CASE("recipe formulas hold against the oracle") {
  const std::pair<RecipeFamily, std::size_t> ranges[] = {
      {RecipeFamily::PowerThenLetter, 1}, {RecipeFamily::PowerBracketed, 4}, {RecipeFamily::ThreeThenPower, 3},
      {RecipeFamily::BinaryTailEven, 10}, {RecipeFamily::BinaryTailOdd, 10}, {RecipeFamily::Trivial, 1}};
  for (const auto& [family, lo] : ranges) {
    for (std::size_t k = lo; k <= 40; ++k) {
      const ConstructionRecipe r(family, k);
      CHECK(r.length() == k);
      CHECK(BigCount{k1(r.symbols())} == r.claimed_complexity());
    }
  }
}

TEST_CASE("construct examples") {
  CHECK(construct_with_complexity(BigCount{14u}, true)->text() == "abbbba");
  CHECK(construct_with_complexity(BigCount{9u}, false)->text() == "aaaab");
  CHECK_FALSE(construct_with_complexity(BigCount{22u}, true).has_value());
  CHECK(construct_with_complexity(BigCount{22u}, false).has_value());
  for (unsigned c : {1u, 2u, 4u}) {
    CHECK_FALSE(construct_with_complexity(BigCount{c}, false).has_value());
    CHECK(is_exceptional_complexity(BigCount{c}, false));
  }
  for (unsigned c : {6u, 10u, 18u, 22u}) {
    CHECK(is_exceptional_complexity(BigCount{c}, true));
    CHECK_FALSE(is_exceptional_complexity(BigCount{c}, false));
  }
  CHECK(construct_with_complexity(BigCount{3u}, false)->text() == "ab");
}

TEST_CASE("construct is sound for every C up to 400") {
  for (unsigned long c = 1; c <= 400; ++c) {
    for (bool binary : {false, true}) {
      const auto r = construct_with_complexity(BigCount{c}, binary);
      CHECK(r.has_value() != is_exceptional_complexity(BigCount{c}, binary));
      if (!r) continue;
      CHECK(k1(r->symbols()) == c);
      const auto pattern = canonicalize(r->symbols());
      CHECK(pattern.num_blocks() >= 2);
      if (binary) CHECK(pattern.num_blocks() == 2);
    }
  }
}

TEST_CASE("construct handles targets past 64 bits") {
  CHECK_THROWS_AS(construct_with_complexity(BigCount::from_string("100000000000000000000"), false), CapacityExceeded);
}

TEST_CASE("exceptional sets match exhaustive search up to 64") {
  for (unsigned long c = 1; c <= 64; ++c) {
    for (bool binary : {false, true}) {
      SearchRequest req{BigCount{c}, std::nullopt, binary ? 2u : 26u, SearchMode::First, true};
      CHECK(search(req).empty() == is_exceptional_complexity(BigCount{c}, binary));
    }
  }
}

TEST_CASE("identities") {
  CHECK(parse_identity('e') == Identity::E);
  CHECK_THROWS_AS(parse_identity('j'), DomainError);
  for (std::size_t k = 1; k <= 12; ++k) {
    CHECK(identity_check(Identity::A, {.k = k}).holds());
    CHECK(identity_check(Identity::B, {.k = k}).holds());
    CHECK(identity_check(Identity::H, {.k = k, .n = 3}).holds());
    for (std::size_t n = 1; n <= k; ++n) CHECK(identity_check(Identity::I, {.k = k, .n = n}).holds());
    for (std::size_t m = 1; m <= 5; ++m) CHECK(identity_check(Identity::G, {.k = k, .m = m}).holds());
    for (std::size_t l = 1; l <= k; ++l) CHECK(identity_check(Identity::F, {.k = k, .ell = l}).holds());
    if (k >= 2) {
      CHECK(identity_check(Identity::C, {.k = k}).holds());
      CHECK(identity_check(Identity::D, {.k = k}).holds());
      for (std::size_t i = 1; i <= k / 2; ++i) CHECK(identity_check(Identity::E, {.k = k, .i = i}).holds());
    }
  }
  const auto e = identity_check(Identity::E, {.k = 7, .i = 3});
  REQUIRE(e.checks.size() == 1);
  CHECK(render(e.checks[0].word) == "aabaaaa");
  CHECK(e.checks[0].measured == BigCount{19u});

  CHECK_THROWS_AS(identity_check(Identity::E, {.k = 7, .i = 4}), DomainError);
  CHECK_THROWS_AS(identity_check(Identity::E, {.k = 7, .i = 0}), DomainError);
  CHECK_THROWS_AS(identity_check(Identity::I, {.k = 3, .n = 4}), DomainError);
  CHECK_THROWS_AS(identity_check(Identity::F, {.k = 3, .ell = 4}), DomainError);
  CHECK_THROWS_AS(identity_check(Identity::D, {.k = 1}), DomainError);
  CHECK_THROWS_AS(identity_check(Identity::H, {.k = 2, .n = 0}), DomainError);
}

TEST_CASE("identities hold on random caller-supplied words") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    const auto w = oracle::random_word(rng, 14, 5);
    const std::vector<Symbol> p(w.begin(), w.end());
    CHECK(identity_check(Identity::A, {.p = p}).holds());
    CHECK(identity_check(Identity::C, {.p = p}).holds());
    CHECK(identity_check(Identity::F, {.p = p}).holds());
    const auto q = oracle::random_word(rng, 8, 4);
    CHECK(identity_check(Identity::G, {.p = p, .q = std::vector<Symbol>(q.begin(), q.end())}).holds());
    if (canonicalize(p).num_blocks() >= 2) CHECK(identity_check(Identity::D, {.p = p}).holds());
  }
}

TEST_CASE("search examples") {
  CHECK(texts(search({BigCount{5u}, 3, 3, SearchMode::AllCanonical})) == std::vector<std::string>{"aab", "aba", "abb"});
  CHECK(texts(search({BigCount{3u}})) == std::vector<std::string>{"ab"});
  CHECK(search({BigCount{4u}, 3}).empty());
  CHECK(texts(search({BigCount{4u}})) == std::vector<std::string>{"aaaa"});
  CHECK(search({BigCount{4u}, std::nullopt, 26, SearchMode::First, true}).empty());
  CHECK(texts(search({BigCount{6u}, 3})) == std::vector<std::string>{"abc"});
  CHECK(search({BigCount{6u}, std::nullopt, 2, SearchMode::First, true}).empty());
  CHECK_THROWS_AS(search({BigCount{0u}}), DomainError);
  CHECK_THROWS_AS(search({BigCount{3u}, std::nullopt, 0}), DomainError);
}

TEST_CASE("fixed-length search is complete and sound for k <= 7, n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = 1; k <= 7; ++k) {
      std::map<std::uint64_t, std::vector<std::string>> expected;
      oracle::for_each_pattern(k, n, [&](const oracle::Seq& w) {
        expected[oracle::substrings(w)].push_back(render(std::span<const Symbol>(w)));
      });
      for (std::uint64_t c = 1; c <= k * (k + 1) / 2 + 1; ++c) {
        auto want = expected.count(c) ? expected[c] : std::vector<std::string>{};
        std::sort(want.begin(), want.end());
        const auto got = search({BigCount{c}, k, n, SearchMode::AllCanonical});
        CHECK(texts(got) == want);
        for (const auto& p : got) CHECK(k1(p.symbols()) == c);
      }
    }
  }
}

TEST_CASE("labelings") {
  const PatternWord aab(std::vector<Symbol>{0, 0, 1});
  CHECK(count_labelings(aab, 3) == BigCount{6u});
  CHECK(count_labelings(aab, 1) == BigCount{0u});
  CHECK(count_labelings(aab, 26) == BigCount{650u});
  const auto all = list_labelings(aab, 3);
  REQUIRE(all.size() == 6);
  CHECK(render(all.front().symbols()) == "aab");
  CHECK(render(all.back().symbols()) == "ccb");
  std::set<std::vector<Symbol>> distinct;
  for (const auto& w : all) {
    CHECK(canonicalize(w) == aab);
    distinct.emplace(w.symbols().begin(), w.symbols().end());
  }
  CHECK(distinct.size() == 6);
}
