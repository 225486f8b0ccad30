#pragma once

#include <complex>
#include <stdexcept>

#include "braidkit/braid_word.hpp"
#include "braidkit/homfly.hpp"
#include "braidkit/laurent.hpp"

namespace braidkit {

/// The input is outside the domain of an invariant (e.g. Alexander of a link).
struct UnsupportedInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Jones polynomial V(t) = P(v = t, z = t^{1/2} - t^{-1/2}), in s = t^{1/2}.
LaurentPoly1 jones(const BraidWord& w);
LaurentPoly1 jones_from_homfly(const LaurentPoly2& p);

/// Alexander polynomial of a knot closure, symmetric with value 1 at t = 1.
LaurentPoly1 alexander(const BraidWord& w);
LaurentPoly1 alexander_from_homfly(const LaurentPoly2& p);

/// A rational multiple of pi, used to name evaluation points exactly.
struct Angle {
  long num = 0;
  long den = 1;
  double radians() const;
};

/// p at t = e^{i angle} (so s = e^{i angle / 2}). Accurate to about 1e-12
/// relative for coefficients up to 1e6 and degree up to 100.
std::complex<double> eval_unit_circle(const LaurentPoly1& p, Angle angle);

struct DegreeStats {
  int min_deg_v = 0;
  int max_deg_v = 0;
  int span_v = 0;
  int min_deg_z = 0;
  int max_deg_z = 0;
  /// Coefficient of z^{max_deg_z}, a polynomial in v (stored in s = v).
  LaurentPoly1 max_cf_z;
  /// Coefficient of v^{max_deg_v}, a polynomial in z (stored in s = z).
  LaurentPoly1 lead_v_coeff;
  /// Coefficient of v^{min_deg_v}, a polynomial in z (stored in s = z).
  LaurentPoly1 low_v_coeff;
};

DegreeStats degree_stats(const LaurentPoly2& p);

/// p(v, z) == p(v^{-1}, z) coefficientwise.
bool is_v_self_conjugate(const LaurentPoly2& p);

/// Which coefficient the positivity filter compares against z^{min_deg_v}.
enum class PositivityReading {
  /// The z^{max_deg_z} coefficient must be the single monomial v^{min_deg_v}.
  TopZCoefficient,
  /// The v^{max_deg_v} coefficient (a polynomial in z) must be z^{min_deg_v}.
  TopVCoefficient,
};

/// Necessary condition for a knot to be the closure of a positive braid:
/// max_deg_z P = min_deg_v P together with a leading-coefficient condition.
bool braid_positive_P_filter(const LaurentPoly2& p,
                             PositivityReading reading = PositivityReading::TopZCoefficient);

/// Parity invariant of P for a closure with `components` components: every
/// v- and z-exponent is congruent to components - 1 mod 2.
bool has_component_parity(const LaurentPoly2& p, int components);

}  // namespace braidkit
