#include <doctest.h>

#include <limits>

#include "braidkit/laurent.hpp"

using namespace braidkit;

TEST_CASE("sparse arithmetic") {
  auto p = vz(1, 0) + vz(-1, 2, 3);
  CHECK((p - p).is_zero());
  CHECK(p + LaurentPoly2{} == p);
  CHECK(p.coeff({-1, 2}) == 3);
  CHECK(p.coeff({5, 5}) == 0);
  CHECK((p * vz(1, 0)).coeff({0, 2}) == 3);
  CHECK(p.pow(0) == LaurentPoly2::constant(1));
  CHECK(p.pow(3) == p * p * p);
  CHECK(LaurentPoly2::from_terms({{{1, 1}, 2}, {{1, 1}, -2}}).is_zero());
}

TEST_CASE("one variable helpers") {
  auto p = s_pow(-2) + s_pow(3, 4);
  CHECK(min_exponent(p) == -2);
  CHECK(max_exponent(p) == 3);
  CHECK(invert_variable(p) == s_pow(2) + s_pow(-3, 4));
  auto d = s_pow(1) - s_pow(-1);
  CHECK(divide_exact(p * d, d) == p);
  CHECK_THROWS_AS(divide_exact(s_pow(0) + s_pow(2), s_pow(0) + s_pow(1)), std::domain_error);
}

TEST_CASE("specialisation") {
  // z -> s - 1/s, v -> s^2
  auto p = vz(1, 1);
  CHECK(specialize(p, 2) == s_pow(3) - s_pow(1));
  // negative z powers divide out exactly
  auto q = vz(-1, -1) - vz(1, -1);
  CHECK(specialize(q, 2) == -(s_pow(1) + s_pow(-1)));
}

TEST_CASE("overflow is reported") {
  auto big = LaurentPoly1::constant(std::numeric_limits<Coeff>::max());
  CHECK_THROWS_AS(big + big, CoefficientOverflow);
  CHECK_THROWS_AS(big * s_pow(0, 2), CoefficientOverflow);
}

TEST_CASE("printing") {
  CHECK(to_string(vz(2, 0, 2) - vz(4, 0) + vz(2, 2)) == "2v^2 - v^4 + v^2z^2");
  CHECK(to_string(s_pow(-2) - s_pow(0) + s_pow(2)) == "t^{-1} - 1 + t");
  CHECK(to_string(s_pow(1)) == "t^{1/2}");
}
