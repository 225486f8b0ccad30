#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace braidkit {

using Coeff = std::int64_t;

/// Thrown when an exact coefficient would leave the 64-bit range.
struct CoefficientOverflow : std::overflow_error {
  CoefficientOverflow() : std::overflow_error("polynomial coefficient overflow") {}
};

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow();
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow();
  return r;
}

/// Exponent pair of a monomial v^v z^z. Ordered by z first so that terms of
/// one z-degree are contiguous.
struct Exp2 {
  int v = 0;
  int z = 0;

  friend bool operator==(const Exp2&, const Exp2&) = default;
  friend bool operator<(const Exp2& a, const Exp2& b) {
    return a.z != b.z ? a.z < b.z : a.v < b.v;
  }
  friend Exp2 operator+(const Exp2& a, const Exp2& b) { return {a.v + b.v, a.z + b.z}; }
};

/// Sparse Laurent polynomial with exact integer coefficients. Terms are kept
/// sorted by exponent with no zero coefficients.
template <class Exp>
class SparsePoly {
 public:
  using Term = std::pair<Exp, Coeff>;

  SparsePoly() = default;
  static SparsePoly constant(Coeff c) { return monomial(Exp{}, c); }
  static SparsePoly monomial(Exp e, Coeff c = 1) {
    SparsePoly p;
    if (c != 0) p.terms_.push_back({e, c});
    return p;
  }
  /// Builds from arbitrary (possibly repeated, unordered) terms.
  static SparsePoly from_terms(std::vector<Term> terms) {
    SparsePoly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Coeff coeff(const Exp& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exp& x) { return t.first < x; });
    return (it != terms_.end() && it->first == e) ? it->second : 0;
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
        out.push_back(*a++);
      } else if (a == terms_.end() || b->first < a->first) {
        out.push_back(*b++);
      } else {
        Coeff c = checked_add(a->second, b->second);
        if (c != 0) out.push_back({a->first, c});
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second = checked_mul(t.second, -1);
    return r;
  }
  SparsePoly& operator-=(const SparsePoly& o) { return *this += -o; }

  /// Multiplication by c * x^e.
  SparsePoly times_monomial(const Exp& e, Coeff c = 1) const {
    SparsePoly r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.first + e, checked_mul(t.second, c)});
    return r;
  }
  SparsePoly scaled(Coeff c) const { return times_monomial(Exp{}, c); }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) out.push_back({x.first + y.first, checked_mul(x.second, y.second)});
    return from_terms(std::move(out));
  }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  SparsePoly pow(unsigned k) const {
    SparsePoly r = constant(1), base = *this;
    while (k) {
      if (k & 1U) r = r * base;
      k >>= 1U;
      if (k) base = base * base;
    }
    return r;
  }

 private:
  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second = checked_add(out.back().second, t.second);
      } else {
        out.push_back(t);
      }
      if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    terms_ = std::move(out);
  }

  std::vector<Term> terms_;
};

/// Two-variable Laurent polynomial in (v, z); houses the skein polynomial.
using LaurentPoly2 = SparsePoly<Exp2>;
/// One-variable Laurent polynomial in s = t^{1/2}; houses V and the
/// Alexander polynomial.
using LaurentPoly1 = SparsePoly<int>;

inline LaurentPoly2 vz(int v, int z, Coeff c = 1) { return LaurentPoly2::monomial({v, z}, c); }
inline LaurentPoly1 s_pow(int e, Coeff c = 1) { return LaurentPoly1::monomial(e, c); }

int min_exponent(const LaurentPoly1& p);
int max_exponent(const LaurentPoly1& p);

/// Exact quotient p / d; throws std::domain_error if d does not divide p.
LaurentPoly1 divide_exact(const LaurentPoly1& p, const LaurentPoly1& d);

/// p(s) -> p(s^{-1}).
LaurentPoly1 invert_variable(const LaurentPoly1& p);

/// Substitutes v = s^v_power and z = s - s^{-1}. Negative z-powers are
/// cleared by exact division.
LaurentPoly1 specialize(const LaurentPoly2& p, int v_power);

/// Evaluation at s = e^{i * half_angle}.
std::complex<double> evaluate_at_phase(const LaurentPoly1& p, double half_angle);

/// Human-readable forms, e.g. "-v^4 + 2v^2 + v^2z^2".
std::string to_string(const LaurentPoly2& p);
/// In t when every s-exponent is even, otherwise in t^{1/2} = s.
std::string to_string(const LaurentPoly1& p, const std::string& var = "t");

}  // namespace braidkit
