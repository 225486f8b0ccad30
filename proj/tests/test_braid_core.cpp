#include <doctest.h>

#include <algorithm>

#include "braidkit/braid_word.hpp"
#include "braidkit/cabling.hpp"
#include "braidkit/moves.hpp"
#include "braidkit/permutation.hpp"
#include "random_words.hpp"

using namespace braidkit;

namespace {
const char* kBetaPrime7 = "1 2 2 2 4 4 3 5 4 4 4 1 3 5 2 2 2 3 4";
}

TEST_CASE("parse_word") {
  auto t = parse_word("1 1 1");
  CHECK(t.strands() == 2);
  CHECK(t.length() == 3);
  CHECK(t.is_positive());

  auto b = parse_word(kBetaPrime7);
  CHECK(b.strands() == 6);
  CHECK(b.length() == 19);

  auto m = parse_word("1 1 1 2 -1 2 1 3 1 2 -1 2 2 3 -2 1 2 -1 2 3 -2");
  CHECK(m.strands() == 4);
  CHECK(m.length() == 21);
  CHECK(std::count_if(m.letters().begin(), m.letters().end(), [](const Letter& l) { return l.sign > 0; }) == 16);

  CHECK(parse_word("").strands() == 1);
  CHECK(parse_word("").empty());
  CHECK(parse_word("n=5; 1 2").strands() == 5);
  CHECK(parse_word("n=5; 1 2", 3).strands() == 3);
  CHECK_THROWS_AS(parse_word("1 0 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1 3", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1 x"), std::invalid_argument);
}

TEST_CASE("format round trip") {
  testutil::Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    auto w = testutil::random_word_upto(rng, 7, 15);
    CHECK(parse_word(format_word(w, true)) == w);
  }
}

TEST_CASE("exponent sums") {
  CHECK(exponent_sum(BraidWord(3)) == 0);
  CHECK(exponent_sum(half_twist(4)) == 6);
  auto b = parse_word(kBetaPrime7);
  CHECK(exponent_sum(b) == 19);
  CHECK(generator_exponent(b, 1) == 2);
  CHECK(generator_exponent(b, 2) == 6);
  CHECK(generator_exponent(BraidWord(2), 1) == 0);
  CHECK_THROWS(generator_exponent(b, 6));
}

TEST_CASE("closure components") {
  CHECK(closure_components(BraidWord(3)) == 3);
  CHECK(closure_components(BraidWord::positive(3, {1, 2})) == 1);
  // the permutation of s1^2 is the identity
  CHECK(closure_components(BraidWord::positive(3, {1, 1})) == 3);
}

TEST_CASE("neighbors") {
  auto yb = neighbors(BraidWord::positive(3, {1, 2, 1}), {MoveKind::YBForward});
  REQUIRE(yb.size() == 1);
  CHECK(yb[0] == BraidWord::positive(3, {2, 1, 2}));

  auto com = neighbors(BraidWord::positive(4, {1, 3}), {MoveKind::Commute});
  REQUIRE(com.size() == 1);
  CHECK(com[0] == BraidWord::positive(4, {3, 1}));

  auto b5 = parse_word("1 3 3 3 2 2 2 4 1 3 3 3 2 2 2 4");
  CHECK(neighbors(b5, {MoveKind::YBForward, MoveKind::YBBackward}).empty());

  auto fc = neighbors(parse_word("1 2 -2 1"), {MoveKind::FreeCancel});
  REQUIRE(fc.size() == 1);
  CHECK(fc[0] == BraidWord::positive(3, {1, 1}));
}

TEST_CASE("stabilize and destabilize") {
  auto t = BraidWord::positive(2, {1, 1, 1});
  CHECK(stabilize(t, 1) == BraidWord::positive(3, {1, 1, 1, 2}));
  CHECK(destabilize(BraidWord::positive(3, {1, 1, 1, 2})) == t);
  CHECK_FALSE(destabilize(BraidWord::positive(3, {1, 2, 1, 2})).has_value());
  // the unique top letter is found after rotation
  CHECK(destabilize(BraidWord::positive(3, {1, 2, 1, 1})) == t);
  CHECK(destabilize_bottom(BraidWord::positive(3, {1, 2, 2, 2})) == t);

  testutil::Rng rng(2);
  for (int i = 0; i < 1000; ++i) {
    auto w = testutil::random_word_upto(rng, 6, 15);
    for (int sign : {1, -1}) {
      auto back = destabilize(stabilize(w, sign));
      REQUIRE(back.has_value());
      CHECK(*back == w);
    }
  }
}

TEST_CASE("moves keep exponent sum and components") {
  testutil::Rng rng(3);
  const MoveSet kinds{MoveKind::YBForward, MoveKind::YBBackward, MoveKind::Commute, MoveKind::CyclicShift,
                      MoveKind::FreeCancel, MoveKind::Flip};
  for (int i = 0; i < 300; ++i) {
    auto w = testutil::random_word_upto(rng, 6, 12);
    for (const auto& u : neighbors(w, kinds)) {
      CHECK(exponent_sum(u) == exponent_sum(w));
      CHECK(closure_components(u) == closure_components(w));
    }
  }
}

TEST_CASE("YB neighbours are symmetric") {
  testutil::Rng rng(4);
  const MoveSet yb{MoveKind::YBForward, MoveKind::YBBackward};
  for (int i = 0; i < 300; ++i) {
    auto w = testutil::random_word_upto(rng, 4, 12);
    for (const auto& u : neighbors(w, yb)) {
      auto back = neighbors(u, yb);
      CHECK(std::find(back.begin(), back.end(), w) != back.end());
    }
  }
}

TEST_CASE("permutation sign matches letter count") {
  testutil::Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    auto w = testutil::random_word_upto(rng, 7, 15);
    CHECK(underlying_permutation(w).sign() == (w.length() % 2 == 0 ? 1 : -1));
    if (is_knot(w)) CHECK(static_cast<int>(w.length() % 2) == (w.strands() - 1) % 2);
  }
}
