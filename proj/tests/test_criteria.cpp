#include <doctest.h>

#include <cmath>

#include "braidkit/cabling.hpp"
#include "braidkit/criteria.hpp"
#include "braidkit/homfly.hpp"
#include "braidkit/invariants.hpp"
#include "braidkit/permutation.hpp"
#include "braidkit/poly_io.hpp"
#include "random_words.hpp"

using namespace braidkit;

namespace {

std::string data(const char* name) { return std::string(BRAIDKIT_TEST_DATA) + "/" + name; }

const LaurentPoly2 one = LaurentPoly2::constant(1);

}  // namespace

TEST_CASE("mwf bounds") {
  CHECK(mwf_bound(one) == 1);
  CHECK(mwf_bound(read_homfly_file(data("p_14_45759.txt"))) == 3);
  CHECK(mwf_bound(read_homfly_file(data("p_13_9465.txt"))) == 3);
  CHECK_THROWS(mwf_bound(LaurentPoly2{}));
  auto cable = read_homfly_file(data("p_14_45759_cable2.txt"));
  CHECK(degree_stats(cable).span_v == 14);
  CHECK(cabled_mwf_bound(cable, 2) == 4);
  auto t = homfly(BraidWord::positive(2, {1, 1, 1}));
  CHECK(cabled_mwf_bound(t, 1) == mwf_bound(t));
  CHECK_THROWS(cabled_mwf_bound(t, 0));
}

TEST_CASE("writhe windows") {
  auto w = admissible_writhes(read_homfly_file(data("p_14_45759.txt")), 4);
  CHECK(w.values() == std::vector<int>{-1, 1});
  CHECK(admissible_writhes(homfly(BraidWord::positive(2, {1, 1, 1})), 2).values() == std::vector<int>{3});
  CHECK(admissible_writhes(one, 1).values() == std::vector<int>{0});
  CHECK(admissible_writhes(homfly(BraidWord::positive(2, {1, 1, 1})), 1).empty());
}

TEST_CASE("unity root test") {
  const auto V = read_knotscape_jones("13 9465 5 15 1 0 1 0 1 -1 0 -1 0 -1 1");
  auto r3 = unity_root_test(V, 3, 10);
  CHECK_FALSE(r3.pass);
  CHECK(std::abs(r3.modulus * r3.modulus - (9 + 2 * std::sqrt(5.0))) < 1e-9);
  CHECK(std::abs(r3.bound * r3.bound - (15 + 5 * std::sqrt(5.0)) / 2) < 1e-9);
  CHECK(unity_root_test(V, 4, 10).pass);
  for (int n = 1; n <= 4; ++n) CHECK(unity_root_test(s_pow(0), n, 5).pass);
  CHECK_THROWS(unity_root_test(V, 3, 2));
}

TEST_CASE("four braid delta test") {
  auto r = four_braid_delta_test(19 * std::sqrt(5.0) - 49);
  CHECK_FALSE(r.excluded());
  CHECK(r.historical_fires);
  CHECK_FALSE(four_braid_delta_test(0).excluded());
  auto big = four_braid_delta_test(11);
  CHECK(big.excluded_by_modulus);
  CHECK(big.excluded_by_upper);
  // only the upper side of the second bound exists
  auto low = four_braid_delta_test(-10.3);
  CHECK_FALSE(low.excluded_by_upper);
  CHECK_FALSE(low.excluded_by_modulus);
}

TEST_CASE("four braid identity") {
  CHECK(four_braid_identity_check(s_pow(0), s_pow(0), 3));
  auto t = BraidWord::positive(4, {1, 1, 1, 2, 3});
  // the trefoil closes from 4 strands at writhes 1, 3 and 5
  for (int e : {1, 3, 5}) CHECK(four_braid_identity_check(jones(t), alexander(t), e));
  CHECK_FALSE(four_braid_identity_check(jones(t), alexander(t), 7));
  CHECK_FALSE(four_braid_identity_check(jones(t), alexander(t), -1));
  CHECK_THROWS(four_braid_identity_check(jones(t), alexander(t), 4));

  testutil::Rng rng(31);
  int tested = 0;
  while (tested < 20) {
    auto w = testutil::random_word(rng, 4, std::uniform_int_distribution<int>(3, 14)(rng));
    if (!is_knot(w)) continue;
    ++tested;
    CHECK(four_braid_identity_check(jones(w), alexander(w), exponent_sum(w)));
  }
}

TEST_CASE("writhe spread and cable contradiction") {
  auto P = read_homfly_file(data("p_14_45759.txt"));
  auto C = read_homfly_file(data("p_14_45759_cable2.txt"));
  CHECK(writhe_spread_bound(P, 4) == 2);
  CHECK(writhe_spread_bound(P, 3) == 0);
  CHECK(writhe_spread_bound(one, 1) == 0);
  CHECK(cable_contradiction_test(C, 2, 4, -1, 1));
  CHECK_FALSE(cable_contradiction_test(C, 2, 4, 1, 1));
  CHECK_FALSE(cable_contradiction_test(C, 2, 5, -1, 1));
  // k = 1 is the spread bound itself
  CHECK(cable_contradiction_test(P, 1, 4, -3, 3));
  CHECK_FALSE(cable_contradiction_test(P, 1, 4, -1, 1));
}

TEST_CASE("writhe count bounds") {
  CHECK(writhe_count_bounds(4, 4, 4) == IntInterval{1, 1});
  CHECK(writhe_count_bounds(5, 4, 4) == IntInterval{2, 2});
  CHECK(writhe_count_bounds(5, 5, 4) == IntInterval{1, 2});
  CHECK_THROWS(writhe_count_bounds(3, 5, 4));
}

TEST_CASE("criteria report") {
  CriteriaInput in;
  in.homfly = read_homfly_file(data("p_14_45759.txt"));
  CHECK(criteria_report(in).aggregate() == 3);
  in.cable_homfly = read_homfly_file(data("p_14_45759_cable2.txt"));
  auto rep = criteria_report(in);
  CHECK(rep.aggregate() == 5);
  for (const auto& e : rep.entries) CHECK(rep.aggregate() >= e.lower_bound);
  CHECK(rep.to_records().find("aggregate=5") != std::string::npos);

  CriteriaInput t;
  t.homfly = homfly(BraidWord::positive(2, {1, 1, 1}));
  CHECK(criteria_report(t).aggregate() == 2);
  t.murakami_excludes_three = true;
  CHECK(criteria_report(t).aggregate() == 4);

  CriteriaInput c;
  c.homfly = read_homfly_file(data("p_13_9465.txt"));
  CHECK(criteria_report(c).aggregate() == 4);
}

TEST_CASE("criteria are sound on braids of known strand count") {
  testutil::Rng rng(32);
  CriteriaOptions none;
  none.unity_roots = none.four_braid = none.cabled = none.achirality = false;
  for (int i = 0; i < 120; ++i) {
    auto w = testutil::random_word_upto(rng, 5, 12);
    const int n = w.strands();
    auto P = homfly(w);
    CHECK(admissible_writhes(P, n).contains(exponent_sum(w)));
    CHECK(mwf_bound(P) <= n);
    auto V = jones_from_homfly(P);
    for (int k = 3; k <= 12; ++k) CHECK(unity_root_test(V, n, k).pass);

    CriteriaInput in;
    in.homfly = P;
    const int base = criteria_report(in, none).aggregate();
    CHECK(criteria_report(in).aggregate() >= base);
    if (n <= 3 && w.length() <= 8 && is_knot(w)) {
      in.cable_homfly = homfly(two_cable(w, 1));
      CHECK(cabled_mwf_bound(*in.cable_homfly, 2) <= n);
      CHECK(criteria_report(in).aggregate() <= n);
    }
  }
}
