#include "braidkit/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace braidkit {

int min_exponent(const LaurentPoly1& p) {
  if (p.is_zero()) throw std::domain_error("degree of zero polynomial");
  return p.terms().front().first;
}

int max_exponent(const LaurentPoly1& p) {
  if (p.is_zero()) throw std::domain_error("degree of zero polynomial");
  return p.terms().back().first;
}

LaurentPoly1 divide_exact(const LaurentPoly1& p, const LaurentPoly1& d) {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.is_zero()) return {};
  const int d_hi = max_exponent(d);
  const Coeff lead = d.terms().back().second;
  LaurentPoly1 rem = p, quot;
  const int lowest = min_exponent(p) - min_exponent(d);
  while (!rem.is_zero()) {
    const auto& top = rem.terms().back();
    int e = top.first - d_hi;
    if (e < lowest || top.second % lead != 0) throw std::domain_error("inexact polynomial division");
    Coeff c = top.second / lead;
    quot += s_pow(e, c);
    rem -= d.times_monomial(e, c);
  }
  return quot;
}

LaurentPoly1 invert_variable(const LaurentPoly1& p) {
  std::vector<LaurentPoly1::Term> t;
  for (const auto& [e, c] : p.terms()) t.push_back({-e, c});
  return LaurentPoly1::from_terms(std::move(t));
}

LaurentPoly1 specialize(const LaurentPoly2& p, int v_power) {
  if (p.is_zero()) return {};
  int min_z = p.terms().front().first.z;
  int max_z = p.terms().back().first.z;
  int shift = min_z < 0 ? -min_z : 0;
  const LaurentPoly1 zsub = s_pow(1) - s_pow(-1);
  std::vector<LaurentPoly1> zpows(static_cast<std::size_t>(std::max(max_z + shift, shift) + 1));
  zpows[0] = LaurentPoly1::constant(1);
  for (std::size_t k = 1; k < zpows.size(); ++k) zpows[k] = zpows[k - 1] * zsub;

  LaurentPoly1 out;
  for (const auto& [e, c] : p.terms()) {
    out += zpows[static_cast<std::size_t>(e.z + shift)].times_monomial(e.v * v_power, c);
  }
  if (shift > 0) out = divide_exact(out, zpows[static_cast<std::size_t>(shift)]);
  return out;
}

std::complex<double> evaluate_at_phase(const LaurentPoly1& p, double half_angle) {
  long double re = 0, im = 0;
  for (const auto& [e, c] : p.terms()) {
    long double a = static_cast<long double>(e) * static_cast<long double>(half_angle);
    re += static_cast<long double>(c) * std::cos(a);
    im += static_cast<long double>(c) * std::sin(a);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

namespace {

void append_term(std::ostringstream& out, Coeff c, const std::string& mono, bool first) {
  if (first) {
    if (c < 0) out << '-';
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  Coeff a = c < 0 ? -c : c;
  if (mono.empty()) {
    out << a;
  } else {
    if (a != 1) out << a;
    out << mono;
  }
}

std::string power(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + (e < 0 ? "{" + std::to_string(e) + "}" : std::to_string(e));
}

}  // namespace

std::string to_string(const LaurentPoly2& p) {
  if (p.is_zero()) return "0";
  // order by z then v, matching the stored order
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    append_term(out, c, power("v", e.v) + power("z", e.z), first);
    first = false;
  }
  return out.str();
}

std::string to_string(const LaurentPoly1& p, const std::string& var) {
  if (p.is_zero()) return "0";
  bool integral = true;
  for (const auto& t : p.terms())
    if (t.first % 2 != 0) integral = false;
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    if (integral) {
      mono = power(var, e / 2);
    } else if (e != 0) {
      mono = var + "^{" + std::to_string(e) + "/2}";
    }
    append_term(out, c, mono, first);
    first = false;
  }
  return out.str();
}

}  // namespace braidkit
