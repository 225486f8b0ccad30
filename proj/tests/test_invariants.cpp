#include <doctest.h>

#include <cmath>
#include <thread>

#include "braidkit/homfly.hpp"
#include "braidkit/invariants.hpp"
#include "braidkit/jones_planar.hpp"
#include "braidkit/moves.hpp"
#include "braidkit/permutation.hpp"
#include "braidkit/poly_io.hpp"
#include "random_words.hpp"

using namespace braidkit;

namespace {

const LaurentPoly2 trefoil = vz(2, 0, 2) - vz(4, 0) + vz(2, 2);

// P(s1^m) from the skein relation alone:
// P(s1^m) = v^2 P(s1^{m-2}) + v z P(s1^{m-1}), P(s1^0) = (v^{-1} - v)/z, P(s1) = 1.
LaurentPoly2 torus2_oracle(int m) {
  LaurentPoly2 a = vz(-1, -1) - vz(1, -1), b = LaurentPoly2::constant(1);
  if (m == 0) return a;
  for (int k = 2; k <= m; ++k) {
    LaurentPoly2 c = vz(2, 0) * a + vz(1, 1) * b;
    a = b;
    b = c;
  }
  return b;
}

}  // namespace

TEST_CASE("homfly base values") {
  CHECK(homfly(BraidWord::positive(2, {1})) == LaurentPoly2::constant(1));
  CHECK(homfly(BraidWord::positive(2, {1, 1, 1})) == trefoil);
  CHECK(homfly(BraidWord(2)) == vz(-1, -1) - vz(1, -1));
  CHECK(homfly(BraidWord(4)) == unlink_value(4));
  CHECK(degree_stats(homfly(BraidWord::positive(2, {1, 1, 1}))).min_deg_v == 2);
}

TEST_CASE("torus links T(2,m) against the skein recursion") {
  for (int m = 0; m <= 11; ++m) {
    std::vector<int> idx(static_cast<std::size_t>(m), 1);
    CHECK(homfly(BraidWord::positive(2, idx)) == torus2_oracle(m));
  }
}

TEST_CASE("figure eight") {
  auto w = parse_word("1 -2 1 -2");
  auto P = homfly(w);
  CHECK(P == vz(-2, 0) - LaurentPoly2::constant(1) + vz(2, 0) - vz(0, 2));
  CHECK(is_v_self_conjugate(P));
  CHECK_FALSE(braid_positive_P_filter(P));
  CHECK(alexander(w) == s_pow(-2, -1) + s_pow(0, 3) - s_pow(2));
}

TEST_CASE("skein relation at every crossing") {
  testutil::Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    auto w = testutil::random_word_upto(rng, 5, 12);
    for (std::size_t p = 0; p < w.length(); ++p) {
      auto ls = w.letters();
      ls[p].sign = 1;
      auto plus = homfly(BraidWord(w.strands(), ls));
      ls[p].sign = -1;
      auto minus = homfly(BraidWord(w.strands(), ls));
      ls.erase(ls.begin() + static_cast<long>(p));
      auto zero = homfly(BraidWord(w.strands(), ls));
      CHECK(vz(-1, 0) * plus - vz(1, 0) * minus == vz(0, 1) * zero);
    }
  }
}

TEST_CASE("parity and degree identities") {
  testutil::Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    auto w = testutil::random_word_upto(rng, 5, 12);
    auto P = homfly(w);
    CHECK(has_component_parity(P, closure_components(w)));
    auto st = degree_stats(P);
    CHECK(st.min_deg_v >= exponent_sum(w) - w.strands() + 1);
    CHECK(st.max_deg_v <= exponent_sum(w) + w.strands() - 1);
    if (w.is_positive() && is_knot(w)) {
      CHECK(st.min_deg_v == st.max_deg_z);
      CHECK(st.min_deg_v == exponent_sum(w) - w.strands() + 1);
    }
  }
}

TEST_CASE("jones agrees with the planar path") {
  CHECK(jones(BraidWord::positive(2, {1, 1, 1})) == s_pow(2) + s_pow(6) - s_pow(8));
  CHECK(jones_planar(BraidWord::positive(2, {1, 1, 1})) == jones(BraidWord::positive(2, {1, 1, 1})));
  CHECK(planar_basis_dimension(4) == 14);
  testutil::Rng rng(13);
  for (int t = 0; t < 150; ++t) {
    auto w = testutil::random_word_upto(rng, 6, 14);
    CHECK(jones(w) == jones_planar(w));
  }
}

TEST_CASE("alexander") {
  CHECK(alexander(BraidWord::positive(2, {1})) == s_pow(0));
  auto d = alexander(BraidWord::positive(2, {1, 1, 1}));
  CHECK(d == s_pow(-2) - s_pow(0) + s_pow(2));
  CHECK(std::abs(std::abs(eval_unit_circle(d, Angle{1, 1})) - 3.0) < 1e-12);
  CHECK_THROWS_AS(alexander(BraidWord(2)), UnsupportedInput);

  testutil::Rng rng(14);
  for (int t = 0; t < 200; ++t) {
    auto w = testutil::random_word_upto(rng, 5, 13);
    if (!is_knot(w)) continue;
    auto D = alexander(w);
    CHECK(D == invert_variable(D));
    long sum = 0;
    for (const auto& [e, c] : D.terms()) sum += c;
    CHECK(sum == 1);
  }
}

TEST_CASE("positivity filter readings") {
  auto tre = homfly(BraidWord::positive(2, {1, 1, 1}));
  auto cinq = homfly(BraidWord::positive(2, {1, 1, 1, 1, 1}));
  CHECK(braid_positive_P_filter(tre));
  CHECK(braid_positive_P_filter(cinq));
  CHECK(braid_positive_P_filter(LaurentPoly2::constant(1)));
  // the other reading rejects the positive trefoil
  CHECK_FALSE(braid_positive_P_filter(tre, PositivityReading::TopVCoefficient));
}

TEST_CASE("degree stats") {
  auto st = degree_stats(trefoil);
  CHECK(st.min_deg_v == 2);
  CHECK(st.max_deg_v == 4);
  CHECK(st.span_v == 2);
  CHECK(st.max_deg_z == 2);
  auto u = degree_stats(LaurentPoly2::constant(1));
  CHECK(u.min_deg_v == 0);
  CHECK(u.max_deg_z == 0);
  CHECK_THROWS(degree_stats(LaurentPoly2{}));
  CHECK_FALSE(is_v_self_conjugate(trefoil));
  CHECK(is_v_self_conjugate(LaurentPoly2::constant(1)));
}

TEST_CASE("unit circle evaluation") {
  CHECK(std::abs(eval_unit_circle(s_pow(0), Angle{2, 7}) - std::complex<double>(1, 0)) < 1e-15);
  // t^{1/2} at t = e^{i pi} is i
  CHECK(std::abs(eval_unit_circle(s_pow(1), Angle{1, 1}) - std::complex<double>(0, 1)) < 1e-15);
}

TEST_CASE("engine is safe under concurrent use") {
  testutil::Rng rng(15);
  std::vector<BraidWord> words;
  for (int i = 0; i < 40; ++i) words.push_back(testutil::random_word_upto(rng, 5, 12));
  std::vector<LaurentPoly2> serial;
  for (const auto& w : words) serial.push_back(homfly(w));

  HomflyEngine engine;
  std::vector<LaurentPoly2> parallel(words.size());
  std::vector<std::thread> pool;
  for (int j = 0; j < 4; ++j) {
    pool.emplace_back([&, j] {
      for (std::size_t i = static_cast<std::size_t>(j); i < words.size(); i += 4) parallel[i] = engine.homfly(words[i]);
    });
  }
  for (auto& t : pool) t.join();
  CHECK(parallel == serial);
}

TEST_CASE("capacity refusal") {
  EngineBudget b;
  b.max_strands = 4;
  HomflyEngine small(b);
  CHECK_THROWS_AS(small.homfly(BraidWord::positive(5, {1, 2, 3, 4})), CapacityError);
  CHECK_THROWS_AS(homfly(BraidWord::positive(10, {1})), CapacityError);
}

TEST_CASE("polynomial text formats") {
  auto P = homfly(parse_word("1 -2 1 -2 3 3 3"));
  CHECK(read_homfly_text(write_homfly_text(P)) == P);
  CHECK(read_homfly_text("# comment\nz^0 : 2:2 4:-1\n\nz^2 : 2:1\n") == trefoil);
  CHECK_THROWS(read_homfly_text("z^0 2:2"));
  // trefoil in the table layout, with the (l, m) signs
  CHECK(read_knotscape_homfly("3 1 0 2\n2 4 -2 -1\n2 2 1\n") == trefoil);
  CHECK(read_knotscape_jones("3 1 1 4 1 0 1 -1") == s_pow(2) + s_pow(6) - s_pow(8));
  CHECK_THROWS(read_knotscape_jones("3 1 1 4 1 0 1"));
}
