#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "oracle.hpp"

#include "forestpat/cycles.hpp"
#include "forestpat/generators.hpp"
#include "forestpat/text.hpp"

using namespace forestpat;
using testing::perm;

TEST_CASE("permutation validation") {
  CHECK_ERROR_KIND(perm({1, 2, 2}), InvalidSequence);
  CHECK_ERROR_KIND(perm({0, 1}), InvalidSequence);
  CHECK_ERROR_KIND(perm({-3}), InvalidSequence);
  CHECK(perm({}).empty());
  CHECK(perm({2, 1, 3}).is_standard());
  CHECK_FALSE(perm({4, 10, 7}).is_standard());
  CHECK(perm({4, 10, 7}).ground() == std::vector<Label>{4, 7, 10});
}

TEST_CASE("standardize") {
  const std::vector<Label> a{10, 4, 7};
  CHECK(standardize(a).word() == std::vector<Label>{3, 1, 2});
  const std::vector<Label> b{3, 6, 8};
  CHECK(standardize(b) == Permutation::identity(3));
}

TEST_CASE("containment on the worked words") {
  const auto p = perm({5, 1, 2, 6, 3, 7, 4, 8});
  CHECK(contains(p, Pattern::parse("231")));
  CHECK_FALSE(contains(p, Pattern::parse("321")));
  CHECK_FALSE(contains(perm({5, 9, 3, 8, 1}), Pattern::parse("123")));
  CHECK(contains(perm({5, 9, 3, 8, 1}), Pattern::parse("231")));
  CHECK(contains(perm({1, 3, 2}), Pattern::parse("!132")));
  CHECK_FALSE(contains(perm({1, 3, 4, 2}), Pattern::parse("!132")));
  CHECK(contains(perm({1, 3, 4, 2}), Pattern::parse("132")));
  CHECK_FALSE(contains(perm({}), Pattern::parse("1")));
}

TEST_CASE("pattern parsing") {
  CHECK(Pattern::parse("!231").mode() == PatternMode::Consecutive);
  CHECK(Pattern::parse("!231").to_string() == "!231");
  CHECK(to_string(testing::pats("321,!231")) == "321,!231");
  CHECK_THROWS_AS(Pattern::parse("22"), Error);
  CHECK_THROWS_AS(Pattern::parse("2x1"), Error);
  CHECK_THROWS_AS(Pattern::parse(""), Error);
  CHECK_THROWS_AS(Pattern::parse("24"), Error);
}

TEST_CASE("symmetries on the worked word") {
  const auto p = perm({5, 9, 3, 8, 1});
  CHECK(reverse(p).word() == std::vector<Label>{1, 8, 3, 9, 5});
  CHECK(complement(p).word() == std::vector<Label>{5, 1, 8, 3, 9});
  CHECK(inverse(p).word() == std::vector<Label>{9, 5, 1, 8, 3});
  CHECK(inverse(perm({12, 3, 11, 2, 9, 8})).word() == std::vector<Label>{9, 3, 12, 11, 8, 2});
  CHECK(complement(perm({4, 10, 7})).word() == std::vector<Label>{10, 4, 7});
}

TEST_CASE("stats") {
  const auto s = stats(perm({5, 9, 3, 8, 1}));
  CHECK(s.descents == std::vector<int>{2, 4});
  CHECK(s.ascents == std::vector<int>{1, 3});
  CHECK(s.lr_maxima == std::vector<Label>{5, 9});
  CHECK(s.lr_minima == std::vector<Label>{5, 3, 1});
  CHECK(stats(Permutation::identity(5)).descents.empty());
  CHECK(stats(perm({4, 6, 7, 2, 5, 1, 3})).lr_minima == std::vector<Label>{4, 2, 1});
}

TEST_CASE("cycles") {
  const auto cd = to_cycles(perm({4, 6, 7, 2, 5, 1, 3}));
  CHECK(to_string(cd) == "(6,1,4,2)(7,3)(5)");
  CHECK(to_string(to_cycles(Permutation::identity(3))) == "(1)(2)(3)");
  CHECK(from_cycles(CycleDecomposition::ordered({{2, 1}})).word() == std::vector<Label>{2, 1});
  CHECK_ERROR_KIND(CycleDecomposition::ordered({{1, 2}, {2}}), InvalidDecomposition);
  CHECK_ERROR_KIND(CycleDecomposition::ordered({{}}), InvalidDecomposition);
}

TEST_CASE("exhaustive symmetry identities, n <= 7") {
  for (int n = 0; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      REQUIRE(reverse(reverse(p)) == p);
      REQUIRE(complement(complement(p)) == p);
      REQUIRE(inverse(inverse(p)) == p);
      REQUIRE(reverse(inverse(p)) == inverse(complement(p)));
      REQUIRE(from_cycles(to_cycles(p)) == p);
    });
  }
}

TEST_CASE("containment agrees with brute subsets, n <= 6") {
  std::vector<Pattern> all;
  for (int k = 1; k <= 4; ++k)
    for_each_permutation(k, [&](const Permutation& q) {
      all.emplace_back(q, PatternMode::Classical);
      all.emplace_back(q, PatternMode::Consecutive);
    });
  for (int n = 0; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      for (const auto& pat : all) {
        const bool got = contains(p, pat);
        REQUIRE(got == oracle::contains(p.word(), pat.perm().word(), pat.mode() == PatternMode::Consecutive));
        REQUIRE(got == contains(complement(p), complement(pat)));
        if (pat.mode() == PatternMode::Consecutive && got) REQUIRE(contains(p, Pattern(pat.perm())));
      }
    });
  }
}

TEST_CASE("containment on arbitrary grounds uses relative order") {
  const std::vector<Label> seq{40, 100, 70};
  CHECK(contains(seq, Pattern::parse("132")));
  CHECK(contains(seq, Pattern::parse("!132")));
  CHECK_FALSE(contains(seq, Pattern::parse("231")));
}
