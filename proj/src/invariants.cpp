#include "braidkit/invariants.hpp"

#include <cmath>
#include <numbers>

#include "braidkit/permutation.hpp"

namespace braidkit {

LaurentPoly1 jones_from_homfly(const LaurentPoly2& p) { return specialize(p, 2); }

LaurentPoly1 jones(const BraidWord& w) { return jones_from_homfly(homfly(w)); }

LaurentPoly1 alexander_from_homfly(const LaurentPoly2& p) {
  LaurentPoly1 d = specialize(p, 0);
  if (d.is_zero()) throw UnsupportedInput("Alexander polynomial vanishes");
  // centre the exponents and fix the sign so that the value at t = 1 is 1
  int lo = min_exponent(d), hi = max_exponent(d);
  if ((lo + hi) % 2 != 0) throw UnsupportedInput("Alexander polynomial cannot be symmetrised");
  d = d.times_monomial(-(lo + hi) / 2);
  Coeff at_one = 0;
  for (const auto& t : d.terms()) at_one = checked_add(at_one, t.second);
  if (at_one == -1) {
    d = -d;
  } else if (at_one != 1) {
    throw UnsupportedInput("Alexander polynomial not normalisable (link closure?)");
  }
  return d;
}

LaurentPoly1 alexander(const BraidWord& w) {
  if (closure_components(w) != 1) throw UnsupportedInput("Alexander polynomial needs a knot closure");
  return alexander_from_homfly(homfly(w));
}

double Angle::radians() const {
  return static_cast<double>(num) * std::numbers::pi / static_cast<double>(den);
}

std::complex<double> eval_unit_circle(const LaurentPoly1& p, Angle angle) {
  // reduce the half angle modulo 2 pi before converting to floating point
  long num = angle.num % (4 * angle.den);
  double half = static_cast<double>(num) * std::numbers::pi / (2.0 * static_cast<double>(angle.den));
  return evaluate_at_phase(p, half);
}

DegreeStats degree_stats(const LaurentPoly2& p) {
  if (p.is_zero()) throw std::domain_error("degree statistics of the zero polynomial");
  DegreeStats s;
  s.min_deg_v = s.max_deg_v = p.terms().front().first.v;
  s.min_deg_z = p.terms().front().first.z;
  s.max_deg_z = p.terms().back().first.z;
  for (const auto& [e, c] : p.terms()) {
    s.min_deg_v = std::min(s.min_deg_v, e.v);
    s.max_deg_v = std::max(s.max_deg_v, e.v);
  }
  s.span_v = s.max_deg_v - s.min_deg_v;
  std::vector<LaurentPoly1::Term> top_z, top_v, low_v;
  for (const auto& [e, c] : p.terms()) {
    if (e.z == s.max_deg_z) top_z.push_back({e.v, c});
    if (e.v == s.max_deg_v) top_v.push_back({e.z, c});
    if (e.v == s.min_deg_v) low_v.push_back({e.z, c});
  }
  s.max_cf_z = LaurentPoly1::from_terms(std::move(top_z));
  s.lead_v_coeff = LaurentPoly1::from_terms(std::move(top_v));
  s.low_v_coeff = LaurentPoly1::from_terms(std::move(low_v));
  return s;
}

bool is_v_self_conjugate(const LaurentPoly2& p) {
  std::vector<LaurentPoly2::Term> mirrored;
  mirrored.reserve(p.size());
  for (const auto& [e, c] : p.terms()) mirrored.push_back({{-e.v, e.z}, c});
  return LaurentPoly2::from_terms(std::move(mirrored)) == p;
}

bool braid_positive_P_filter(const LaurentPoly2& p, PositivityReading reading) {
  if (p.is_zero()) return false;
  DegreeStats s = degree_stats(p);
  if (s.max_deg_z != s.min_deg_v) return false;
  if (reading == PositivityReading::TopZCoefficient) {
    return s.max_cf_z == s_pow(s.min_deg_v);
  }
  return s.lead_v_coeff == s_pow(s.min_deg_v);
}

bool has_component_parity(const LaurentPoly2& p, int components) {
  const int par = (components - 1) & 1;
  for (const auto& [e, c] : p.terms()) {
    if ((e.v & 1) != par || (e.z & 1) != par) return false;
  }
  return true;
}

}  // namespace braidkit
