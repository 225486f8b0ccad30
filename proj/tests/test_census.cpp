#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "braidkit/census.hpp"
#include "braidkit/homfly.hpp"
#include "braidkit/invariants.hpp"
#include "braidkit/moves.hpp"
#include "braidkit/permutation.hpp"
#include "random_words.hpp"

using namespace braidkit;

namespace {

BraidWord pos(int n, std::vector<int> idx) { return BraidWord::positive(n, idx); }

bool contains(const std::vector<BraidWord>& ws, const BraidWord& w) {
  return std::find(ws.begin(), ws.end(), w) != ws.end();
}

}  // namespace

TEST_CASE("canonical forms") {
  CHECK(canonicalize(pos(3, {2, 1, 1})) == pos(3, {1, 1, 2}));
  CHECK(canonicalize(pos(3, {2, 2, 1, 1})) == pos(3, {1, 1, 2, 2}));
  auto b5 = beta_family(5);
  auto orbit = canonicalize(b5, CanonicalPolicy::orbit_only());
  CHECK(orbit.length() == 16);
  CHECK(orbit == canonicalize(rotate(b5, 5), CanonicalPolicy::orbit_only()));
  CHECK_THROWS(canonicalize(parse_word("1 -2")));

  // maximal index sum picks the other end of the YB class
  auto p = CanonicalPolicy::max_digit_sum();
  CHECK(canonicalize(pos(3, {1, 2, 1}), p) == pos(3, {1, 2, 2}));
}

TEST_CASE("enumeration") {
  auto two = enumerate_positive(2, 3);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == pos(2, {1, 1, 1}));

  auto three = enumerate_positive(3, 4);
  CHECK(contains(three, pos(3, {1, 1, 2, 2})));
  CHECK(contains(three, pos(3, {1, 1, 1, 2})));
  // s1 s2 s1 s2 is YB-equivalent to s2 s1 s2 s2, a rotation of the flip of s1^3 s2
  CHECK(three.size() == 2);
  CHECK(canonicalize(pos(3, {1, 2, 1, 2})) == pos(3, {1, 1, 1, 2}));

  for (int n = 2; n <= 4; ++n) {
    for (int c = 0; c <= 7; ++c) {
      auto ws = enumerate_positive(n, c);
      for (const auto& w : ws) {
        CHECK(canonicalize(w) == w);
        for (int i = 1; i < n; ++i) CHECK(generator_count(w, i) > 0);
      }
      CHECK(enumerate_positive(n, c, {}, 3) == ws);
    }
  }
}

TEST_CASE("composite filter") {
  CHECK(composite_or_disconnected_filter(pos(2, {1, 1, 1})) == ClosureVerdict::Knot);
  CHECK(composite_or_disconnected_filter(pos(3, {1, 1, 2})) == ClosureVerdict::NonKnot);
  CHECK(composite_or_disconnected_filter(pos(3, {1, 1, 1, 2})) == ClosureVerdict::Composite);
  CHECK(composite_or_disconnected_filter(pos(3, {1, 1, 2, 2})) == ClosureVerdict::NonKnot);
  // trefoil # trefoil
  CHECK(composite_or_disconnected_filter(pos(3, {1, 1, 1, 2, 2, 2})) == ClosureVerdict::Composite);
  CHECK(composite_or_disconnected_filter(pos(3, {1, 1, 1, 2, 1, 1, 1, 2})) == ClosureVerdict::Knot);
  CHECK(square_elimination_disconnects(pos(3, {1, 1, 2, 2, 1, 1}), {2}));
  CHECK_FALSE(square_elimination_disconnects(pos(3, {1, 2, 1, 2}), {1, 2}));
}

TEST_CASE("reduction search") {
  auto r = reduction_search(pos(3, {1, 1, 1, 2}), 1000);
  CHECK(r.best_word == pos(2, {1, 1, 1}));
  CHECK(r.moves_applied == 1);
  CHECK_THROWS(reduction_search(pos(2, {1}), 0));
  CHECK_THROWS(reduction_search(parse_word("1 -1"), 10));

  // a stabilised trefoil hidden behind YB and rotations
  auto h = pos(4, {2, 1, 2, 2, 3, 1});
  auto rh = reduction_search(h, 10000);
  CHECK(rh.best_word.strands() < 4);

  testutil::Rng rng(41);
  for (int i = 0; i < 40; ++i) {
    auto w = testutil::random_word(rng, 4, std::uniform_int_distribution<int>(3, 10)(rng), true);
    if (!is_knot(w)) continue;
    auto best = reduction_search(w, 5000).best_word;
    CHECK(exponent_sum(best) - best.strands() == exponent_sum(w) - w.strands());
    CHECK(homfly(best) == homfly(w));
  }
}

TEST_CASE("certificates") {
  CHECK(three_move_reduce(pos(2, {1, 1, 1})));
  CHECK(three_move_reduce(thdn_family(4)));
  CHECK_FALSE(three_move_reduce(pos(3, {1, 1, 2, 2})));
  CHECK(irreducible_certificate(pos(2, {1, 1, 1})));
  CHECK_FALSE(irreducible_certificate(pos(3, {1, 1, 1, 2})));
  for (int n = 4; n <= 7; ++n) CHECK(colouring_certificate(thdn_family(n)));
  for (int n = 4; n <= 5; ++n) CHECK(irreducible_certificate(thdn_family(n)));
  CHECK(minimality_certificate(pos(3, {1, 1, 1, 2, 1, 1, 1, 2})));
  CHECK_FALSE(minimality_certificate(pos(3, {1, 1, 1, 2})));

  // the colouring action and the Jones value agree
  testutil::Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    auto w = testutil::random_word_upto(rng, 5, 12, true);
    CHECK(colouring_certificate(w) == irreducible_certificate(w));
    if (three_move_reduce(w, 20000)) {
      CHECK(std::abs(std::abs(eval_unit_circle(jones(w), Angle{1, 3})) - std::pow(std::sqrt(3.0), w.strands() - 1)) <
            1e-6);
    }
  }
}

TEST_CASE("families") {
  const int lengths[] = {15, 18, 21, 30};
  for (int n = 4; n <= 7; ++n) {
    auto w = thdn_family(n);
    CHECK(static_cast<int>(w.length()) == lengths[n - 4]);
    CHECK(thdn_length(n) == lengths[n - 4]);
    CHECK(is_knot(w));
    CHECK(w.strands() == n);
  }
  CHECK(beta_family(5) == parse_word("1 3 3 3 2 2 2 4 1 3 3 3 2 2 2 4"));
  CHECK(beta_family(7).length() == 20);
  CHECK(beta_family(7).strands() == 7);
  CHECK(beta_family(9).length() == 24);
  CHECK(minimality_certificate(beta_family(5)));
  CHECK_THROWS(thdn_family(3));
  CHECK_THROWS(beta_family(6));
  CHECK(homfly(beta_family(7)) == homfly(parse_word("1 2 2 2 4 4 3 5 4 4 4 1 3 5 2 2 2 3 4")));
}

TEST_CASE("d_n") {
  CHECK(d_n_pipeline(2, 5).d == 3);
  auto r3 = d_n_pipeline(3, 10, 2);
  CHECK(r3.d == 8);
  REQUIRE(r3.witness);
  CHECK(minimality_certificate(*r3.witness));
  auto r4 = d_n_pipeline(4, 9);
  CHECK_FALSE(r4.d.has_value());
  CHECK(r4.note.find("inconclusive") != std::string::npos);
}

TEST_CASE("length 9 exhaustion") {
  Exhaust9Stats st;
  CHECK(exhaust_length9({}, &st).empty());
  CHECK(st.generated == 19683);
  Exhaust9Options off;
  off.letter_count_filter = false;
  CHECK_FALSE(exhaust_length9(off).empty());
}

TEST_CASE("subwords") {
  auto b1 = parse_word("1 1 2 2 3 3", 6);
  auto b2 = parse_word("3 3 4 4 5 5", 6);
  auto w = subword_compose(b1, b2);
  CHECK(w.strands() == 6);
  CHECK(w.length() == 10);
  auto [x, y] = subword_split(w);
  CHECK(x == parse_word("1 1 2 2 3 3", 4));
  CHECK(y == b2);
  CHECK_THROWS(subword_compose(parse_word("1 3", 6), parse_word("3 3 4", 6)));

  testutil::Rng rng(43);
  std::uniform_int_distribution<int> count(0, 4), lo(1, 2), hi(4, 5);
  for (int i = 0; i < 100; ++i) {
    const int threes = count(rng);
    std::vector<int> a, b;
    for (int s = 0; s <= threes; ++s) {
      for (int j = count(rng); j > 0; --j) a.push_back(lo(rng));
      for (int j = count(rng); j > 0; --j) b.push_back(hi(rng));
      if (s < threes) {
        a.push_back(3);
        b.push_back(3);
      }
    }
    auto p = BraidWord::positive(4, a), q = BraidWord::positive(6, b);
    auto [s1, s2] = subword_split(subword_compose(p, q));
    CHECK(s1 == p);
    CHECK(s2 == q);
  }

  auto profiles = subword_size_profiles(17);
  CHECK(profiles == std::vector<SizeProfile>{{10, 3, 10}, {10, 4, 11}, {11, 5, 11}});
}

TEST_CASE("census records and files") {
  auto rec = make_record(pos(3, {1, 1, 1, 2}), 1000);
  CHECK(rec.is_knot);
  CHECK(rec.composite);
  // composites are flagged, not searched
  CHECK_FALSE(rec.reduction);
  CHECK(parse_record(format_record(rec)).word == rec.word);

  // a generator used once is a split too, so stabilisations never reach the search
  CHECK(make_record(pos(4, {2, 1, 2, 1, 1, 3, 2}), 10000).composite);
  auto t34 = make_record(pos(3, {1, 2, 1, 2, 1, 2, 1, 2}), 10000);
  CHECK(t34.is_knot);
  CHECK_FALSE(t34.composite);
  CHECK_FALSE(t34.reduction);
  CHECK(format_record(parse_record(format_record(t34))) == format_record(t34));

  auto dir = std::filesystem::temp_directory_path() / "braidkit_census_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  CensusOptions one;
  CensusOptions many;
  many.jobs = 3;
  auto a = run_census(3, 8, (dir / "a.txt").string(), one);
  auto b = run_census(3, 8, (dir / "b.txt").string(), many);
  std::ifstream fa(dir / "a.txt"), fb(dir / "b.txt");
  std::string sa((std::istreambuf_iterator<char>(fa)), {}), sb((std::istreambuf_iterator<char>(fb)), {});
  CHECK(!sa.empty());
  CHECK(sa == sb);
  CHECK(a.size() == b.size());
  for (const auto& r : a) {
    CHECK(r.crossings == 8);
    CHECK(r.word.is_positive());
    if (r.irreducible_certified) CHECK_FALSE(r.reduction.has_value());
  }
  // a rerun reuses the finished file
  auto c = run_census(3, 8, (dir / "a.txt").string(), one);
  CHECK(c.size() == a.size());
  std::filesystem::remove_all(dir);
}
