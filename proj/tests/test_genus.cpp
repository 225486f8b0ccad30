#include <doctest.h>

#include "braidkit/genus.hpp"
#include "braidkit/homfly.hpp"
#include "braidkit/invariants.hpp"
#include "braidkit/moves.hpp"
#include "braidkit/permutation.hpp"
#include "random_words.hpp"

using namespace braidkit;

namespace {

const char* kMain = "1 1 1 2 -1 2 3 -2 1 2 -1 2 3 -2 3 1 1 2 -1 1 2 3 -2 -1 3";

const char* kFurther[] = {
    "1 1 1 2 -1 2 1 3 1 2 -1 2 2 3 -2 1 2 -1 2 3 -2",
    "1 1 1 2 -1 2 1 3 1 2 -1 2 3 -2 1 2 -1 1 2 3 -2 -1 2 3 -2",
    "1 1 1 2 -1 2 2 3 -2 1 2 -1 2 3 -2 3 1 2 -1 1 2 3 -2 3 -1",
    "1 1 1 2 -1 2 1 3 2 -1 1 2 3 -2 -1 2 3 -2 1 1 2 -1 2 3 -2",
    "1 1 1 2 -1 2 1 3 2 -1 1 2 3 -2 -1 2 3 -2 1 2 -1 2 3 -2 3",
    "1 1 1 2 -1 2 3 -2 1 1 2 -1 1 2 3 -2 -1 2 3 -2 1 2 -1 1 2 3 -2 3 -1",
    "1 1 1 2 -1 2 3 -2 1 2 -1 1 2 3 -2 -1 2 3 -2 3 1 2 -1 1 2 3 -2 3 -1",
};

}  // namespace

TEST_CASE("positive genus") {
  CHECK(positive_genus(BraidWord::positive(2, {1, 1, 1})) == 1);
  CHECK(positive_genus(parse_word("1 2 2 3 3 3 1 1 4 2 2 2 3 3 3 4")) == 6);
  CHECK(positive_genus(parse_word("1 2 2 2 3 3 3 1 4 2 2 2 3 3 3 4")) == 6);
  CHECK_THROWS(positive_genus(parse_word("1 -2 1 -2")));
  CHECK_THROWS(positive_genus(BraidWord::positive(3, {1, 1, 2, 2})));
  CHECK(bennequin_lower(BraidWord::positive(2, {1, 1, 1})) == 2);

  testutil::Rng rng(51);
  for (int i = 0; i < 100; ++i) {
    auto w = testutil::random_word_upto(rng, 5, 14, true);
    if (!is_knot(w)) continue;
    CHECK(bennequin_lower(w) == 2 * positive_genus(w));
    CHECK(degree_stats(homfly(w)).min_deg_v == bennequin_lower(w));
  }
}

TEST_CASE("band parse of the main word") {
  auto w = parse_word(kMain);
  auto b = band_parse(w);
  REQUIRE(b);
  CHECK(b->strands == 4);
  CHECK(b->bands.size() == 11);
  CHECK(b->one_minus_chi() == 8);
  CHECK(b->reassemble() == w);
  CHECK(format_bands(*b) == "1 1 (1 2 -1) (2 3 -2) (1 2 -1) (2 3 -2) 3 1 (1 2 -1) (1 2 3 -2 -1) 3");
  CHECK(exponent_sum(w) == 11);
  CHECK_FALSE(band_parse(parse_word("-1 2")).has_value());
}

TEST_CASE("band parse round trip") {
  testutil::Rng rng(52);
  std::uniform_int_distribution<int> bands(1, 6), conj(0, 2), coin(0, 1);
  for (int t = 0; t < 200; ++t) {
    const int n = 5;
    std::vector<Letter> letters;
    for (int b = bands(rng); b > 0; --b) {
      auto u = testutil::random_word(rng, n, conj(rng)).letters();
      letters.insert(letters.end(), u.begin(), u.end());
      letters.push_back({std::uniform_int_distribution<int>(1, n - 1)(rng), 1});
      for (auto it = u.rbegin(); it != u.rend(); ++it) letters.push_back(it->inverse());
    }
    BraidWord w(n, letters);
    auto p = band_parse(w);
    REQUIRE(p);
    CHECK(p->reassemble() == w);
  }
}

TEST_CASE("the further words") {
  for (const char* text : kFurther) {
    auto w = parse_word(text);
    CHECK(w.strands() == 4);
    CHECK(exponent_sum(w) == 11);
    auto b = band_parse_conjugate(w);
    REQUIRE(b);
    CHECK(b->bands.bands.size() == 11);
    CHECK(b->bands.reassemble() == b->word);
    CHECK(homfly(b->word) == homfly(w));
  }
}

TEST_CASE("Morton checks") {
  auto m = morton_conjecture_check(parse_word(kMain));
  CHECK(m.verdict == MortonVerdict::Violated);
  CHECK(m.min_deg_v == 10);
  CHECK(m.lower == 8);
  CHECK(m.upper == 8);
  CHECK(std::string(to_string(m.verdict)) == "VIOLATED");
  CHECK(morton_conjecture_check(BraidWord::positive(2, {1, 1, 1})).verdict == MortonVerdict::Consistent);
  CHECK_THROWS(morton_conjecture_check(BraidWord(2)));

  auto g = canonical_genus_check(BraidWord::positive(2, {1, 1, 1}));
  CHECK(g.max_deg_z == 2);
  CHECK(g.slack() == 0);
  CHECK(canonical_genus_check(BraidWord::positive(3, {1, 1, 1, 2})).slack() == 0);
  testutil::Rng rng(53);
  for (int i = 0; i < 150; ++i) {
    auto w = testutil::random_word_upto(rng, 5, 12);
    if (!is_knot(w)) continue;
    CHECK(canonical_genus_check(w).holds());
    CHECK(canonical_genus_check(stabilize(w, 1)).slack() == canonical_genus_check(w).slack());
  }
}
