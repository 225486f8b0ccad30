#include "braidkit/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "braidkit/invariants.hpp"

namespace braidkit {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int floor_mod2(int x) { return ((x % 2) + 2) % 2; }

// P(1, z) is the Conway polynomial; its constant term is 1 for knots and 0
// for links
bool is_knot_polynomial(const LaurentPoly2& p) {
  if (!has_component_parity(p, 1)) return false;
  Coeff c0 = 0;
  for (const auto& [e, c] : p.terms())
    if (e.z == 0) c0 += c;
  return c0 == 1;
}

}  // namespace

bool WritheWindow::contains(int e) const {
  return e >= min_writhe && e <= max_writhe && floor_mod2(e) == parity;
}

std::vector<int> WritheWindow::values() const {
  std::vector<int> out;
  for (int e = min_writhe; e <= max_writhe; ++e)
    if (contains(e)) out.push_back(e);
  return out;
}

int mwf_bound(const LaurentPoly2& p) {
  if (p.is_zero()) throw std::domain_error("MWF bound of zero polynomial");
  return (degree_stats(p).span_v + 1) / 2 + 1;
}

int cabled_mwf_bound(const LaurentPoly2& p_cable, int k) {
  if (k < 1) throw std::invalid_argument("cable degree must be >= 1");
  const int lifted = mwf_bound(p_cable);
  return (lifted + k - 1) / k;
}

WritheWindow admissible_writhes(const LaurentPoly2& p, int n) {
  if (n < 1) throw std::invalid_argument("strand count must be >= 1");
  auto st = degree_stats(p);
  WritheWindow w;
  w.parity = floor_mod2(n - 1 + st.min_deg_v);
  w.min_writhe = st.max_deg_v - n + 1;
  w.max_writhe = st.min_deg_v + n - 1;
  // tighten to the parity class so that empty() is exact
  if (floor_mod2(w.min_writhe) != w.parity) ++w.min_writhe;
  if (floor_mod2(w.max_writhe) != w.parity) --w.max_writhe;
  return w;
}

UnityRootResult unity_root_test(const LaurentPoly1& jones, int n, int k) {
  if (k < 3 || n < 1) throw std::invalid_argument("unity root test needs k >= 3, n >= 1");
  UnityRootResult r;
  r.n = n;
  r.k = k;
  r.modulus = std::abs(eval_unit_circle(jones, Angle{2, k}));
  r.bound = std::pow(2.0 * std::cos(std::numbers::pi / k), n - 1);
  r.pass = !(r.modulus > r.bound + kCriterionTolerance);
  return r;
}

double four_braid_modulus_bound() { return 6.0 + 2.0 * std::sqrt(5.0); }
double four_braid_upper_bound() { return (9.0 + 5.0 * std::sqrt(5.0)) / 2.0; }

FourBraidDeltaResult four_braid_delta_test(double x) {
  FourBraidDeltaResult r;
  r.value = x;
  r.excluded_by_modulus = std::abs(x) > four_braid_modulus_bound() + kCriterionTolerance;
  r.excluded_by_upper = x > four_braid_upper_bound() + kCriterionTolerance;
  r.historical_fires = std::abs(x) > kHistoricalFourBraidBound + kCriterionTolerance;
  return r;
}

bool four_braid_identity_check(const LaurentPoly1& V, const LaurentPoly1& D, int e) {
  if (e % 2 == 0) throw std::invalid_argument("four-braid identity needs odd exponent sum");
  // everything in s = t^{1/2}
  LaurentPoly1 lhs = V.times_monomial(-2 * e) + invert_variable(V).times_monomial(2 * e);
  LaurentPoly1 a = s_pow(-3) + s_pow(-1) + s_pow(1) + s_pow(3);
  LaurentPoly1 b = s_pow(-e) + s_pow(e);
  LaurentPoly1 c = s_pow(-4) + s_pow(-2) + s_pow(0, 2) + s_pow(2) + s_pow(4);
  return lhs == a * b - c * D;
}

int writhe_spread_bound(const LaurentPoly2& p, int n) {
  const int span = degree_stats(p).span_v;
  return std::max(0, 2 * (n - span / 2 - 1));
}

bool cable_contradiction_test(const LaurentPoly2& p_cable, int k, int n, int w1, int w2) {
  if (k < 1) throw std::invalid_argument("cable degree must be >= 1");
  if (w1 == w2) return false;
  const double lhs = (degree_stats(p_cable).span_v / 2.0 + 1.0) / k;
  const double rhs = n - std::abs(w1 - w2) / 2.0;
  return lhs > rhs + 1e-12;
}

IntInterval writhe_count_bounds(int k, int b_upper, int best_cable_bound) {
  if (k < best_cable_bound) throw std::invalid_argument("k is below the braid index lower bound");
  if (b_upper < best_cable_bound) throw std::invalid_argument("upper bound below lower bound");
  return {k - b_upper + 1, k - best_cable_bound + 1};
}

int CriterionReport::aggregate() const {
  int best = 1;
  for (const auto& e : entries) best = std::max(best, e.lower_bound);
  return best;
}

std::string CriterionReport::to_text() const {
  std::ostringstream out;
  std::size_t width = 9;
  for (const auto& e : entries) width = std::max(width, e.name.size());
  for (const auto& e : entries) {
    out << std::left << std::setw(static_cast<int>(width)) << e.name << "  >= " << std::setw(3) << e.lower_bound;
    if (!std::isnan(e.margin)) out << "  margin " << std::setprecision(9) << e.margin << " (tol " << e.tolerance << ")";
    if (!e.inputs.empty()) out << "  [" << e.inputs << "]";
    out << '\n';
  }
  out << std::left << std::setw(static_cast<int>(width)) << "aggregate" << "  >= " << aggregate() << '\n';
  return out.str();
}

std::string CriterionReport::to_records() const {
  std::ostringstream out;
  out << std::setprecision(12);
  for (const auto& e : entries) {
    out << "criterion=" << e.name << " lower_bound=" << e.lower_bound;
    if (!std::isnan(e.margin)) out << " margin=" << e.margin << " tolerance=" << e.tolerance;
    if (!e.inputs.empty()) out << " inputs=\"" << e.inputs << '"';
    out << '\n';
  }
  out << "aggregate=" << aggregate() << '\n';
  return out.str();
}

CriterionReport criteria_report(const CriteriaInput& in, const CriteriaOptions& opt) {
  CriterionReport rep;
  rep.murakami_excludes_three = in.murakami_excludes_three;
  const LaurentPoly2& P = in.homfly;
  const bool knot = is_knot_polynomial(P);

  if (opt.mwf) {
    rep.entries.push_back({"mwf", mwf_bound(P), "span_v " + std::to_string(degree_stats(P).span_v), kNaN, 0});
  }

  if (opt.unity_roots) {
    const LaurentPoly1 V = in.jones ? *in.jones : jones_from_homfly(P);
    for (int k = std::max(3, opt.root_k_min); k <= opt.root_k_max; ++k) {
      // smallest n the test admits; 64 is far beyond any desk-scale input
      for (int n = 1; n <= 64; ++n) {
        auto r = unity_root_test(V, n, k);
        if (!r.pass) continue;
        if (n > 1) {
          auto prev = unity_root_test(V, n - 1, k);
          rep.entries.push_back({"unity-root k=" + std::to_string(k), n,
                                 "|V(e^{2pi i/" + std::to_string(k) + "})| = " + std::to_string(r.modulus),
                                 prev.margin(), kCriterionTolerance});
        }
        break;
      }
    }
  }

  if (opt.four_braid && knot) {
    const LaurentPoly1 D = in.alexander ? *in.alexander : alexander_from_homfly(P);
    const double value = eval_unit_circle(D, Angle{2, 5}).real();
    auto r = four_braid_delta_test(value);
    CriterionEntry e{"four-braid-delta", r.excluded() ? 5 : 1, "Delta(e^{2pi i/5}) = " + std::to_string(value),
                     four_braid_modulus_bound() - std::abs(value), kCriterionTolerance};
    rep.entries.push_back(e);

    const LaurentPoly1 V = in.jones ? *in.jones : jones_from_homfly(P);
    auto window = admissible_writhes(P, 4);
    bool some = false;
    for (int w : window.values()) some = some || four_braid_identity_check(V, D, w);
    if (!window.empty()) {
      rep.entries.push_back({"four-braid-identity", some ? 1 : 5,
                             "writhes " + std::to_string(window.min_writhe) + ".." + std::to_string(window.max_writhe),
                             kNaN, 0});
    }
  }

  if (opt.cabled && in.cable_homfly) {
    rep.entries.push_back({"cabled-mwf k=" + std::to_string(in.cable_k), cabled_mwf_bound(*in.cable_homfly, in.cable_k),
                           "cable span_v " + std::to_string(degree_stats(*in.cable_homfly).span_v), kNaN, 0});
  }

  if (rep.murakami_excludes_three && *rep.murakami_excludes_three) {
    rep.entries.push_back({"murakami (external)", 4, "supplied verdict", kNaN, 0});
  }

  // For an achiral knot every n-strand writhe w comes with -w; if the cable
  // forbids each such pair, n strands are impossible.
  if (opt.achirality && knot && in.cable_homfly && is_v_self_conjugate(P)) {
    int n = rep.aggregate();
    const int start = n;
    for (;; ++n) {
      auto window = admissible_writhes(P, n);
      bool excluded = true;
      for (int w : window.values()) {
        if (!cable_contradiction_test(*in.cable_homfly, in.cable_k, n, w, -w)) excluded = false;
      }
      if (!excluded) break;
    }
    if (n > start) {
      rep.entries.push_back({"achiral-cable", n, "writhe pairs +-w excluded for n < " + std::to_string(n), kNaN, 0});
    }
  }
  return rep;
}

}  // namespace braidkit
