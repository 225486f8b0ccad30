#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidkit/laurent.hpp"

namespace braidkit {

/// Numeric exclusions fire only when an inequality is violated by more than this.
inline constexpr double kCriterionTolerance = 1e-6;

/// Writhes admitted for an n-strand representation: every value in
/// [min_writhe, max_writhe] congruent to parity mod 2. Empty when min > max.
struct WritheWindow {
  int min_writhe = 0;
  int max_writhe = -1;
  int parity = 0;

  bool empty() const { return min_writhe > max_writhe; }
  bool contains(int e) const;
  std::vector<int> values() const;
};

/// span_v / 2 + 1, rounded up for links.
int mwf_bound(const LaurentPoly2& p);
/// ceil((span_v(P of the k-cable) / 2 + 1) / k).
int cabled_mwf_bound(const LaurentPoly2& p_cable, int k);

/// [max_deg_v - n + 1, min_deg_v + n - 1] with the parity of n - 1 + min_deg_v
/// (for knots min_deg_v is even and this is n - 1).
WritheWindow admissible_writhes(const LaurentPoly2& p, int n);

struct UnityRootResult {
  int n = 0;
  int k = 0;
  double modulus = 0;  // |V(e^{2 pi i / k})|
  double bound = 0;    // (2 cos pi/k)^{n-1}
  bool pass = true;    // false: no n-strand representation
  double margin() const { return modulus - bound; }
  double margin_squared() const { return modulus * modulus - bound * bound; }
};

UnityRootResult unity_root_test(const LaurentPoly1& jones, int n, int k);

struct FourBraidDeltaResult {
  double value = 0;
  bool excluded_by_modulus = false;   // |value| > 6 + 2 sqrt 5
  bool excluded_by_upper = false;     // value > (9 + 5 sqrt 5) / 2
  bool historical_fires = false;      // |value| > 6.5, the withdrawn bound
  bool excluded() const { return excluded_by_modulus || excluded_by_upper; }
};

double four_braid_modulus_bound();  // 6 + 2 sqrt 5
double four_braid_upper_bound();    // (9 + 5 sqrt 5) / 2
inline constexpr double kHistoricalFourBraidBound = 6.5;

/// `delta_at_root` is Delta_K(e^{2 pi i / 5}), which is real.
FourBraidDeltaResult four_braid_delta_test(double delta_at_root);

/// Exact check of
///   t^{-e} V(t) + t^e V(1/t)
///     = (t^{-3/2} + t^{-1/2} + t^{1/2} + t^{3/2})(t^{-e/2} + t^{e/2})
///       - (t^{-2} + t^{-1} + 2 + t + t^2) Delta(t)
/// which every knot closure of a 4-braid with exponent sum e satisfies.
/// Throws std::invalid_argument for even e.
bool four_braid_identity_check(const LaurentPoly1& jones, const LaurentPoly1& alexander, int e);

/// Largest |[b] - [b']| allowed between two n-strand representations:
/// 2 (n - span_v / 2 - 1), floored at 0.
int writhe_spread_bound(const LaurentPoly2& p, int n);

/// True when two n-strand representations with writhes w1 and w2 cannot both
/// exist, given the skein polynomial of the k-cable.
bool cable_contradiction_test(const LaurentPoly2& p_cable, int k, int n, int w1, int w2);

struct IntInterval {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

/// Range for the number of distinct writhes of k-strand representations,
/// [k - b_upper + 1, k - best_cable_bound + 1], where b_upper is the best
/// known upper bound for the braid index and best_cable_bound the best
/// (cabled) MWF lower bound.
IntInterval writhe_count_bounds(int k, int b_upper, int best_cable_bound);

struct CriterionEntry {
  std::string name;
  int lower_bound = 1;
  std::string inputs;
  /// How far the deciding inequality was from flipping; NaN when not numeric.
  double margin = 0;
  double tolerance = 0;
};

struct CriterionReport {
  std::vector<CriterionEntry> entries;
  /// Verdict of Murakami's 3-braid criterion, supplied from outside:
  /// true means "not a closed 3-braid".
  std::optional<bool> murakami_excludes_three;

  int aggregate() const;
  std::string to_text() const;
  /// One key=value record per line.
  std::string to_records() const;
};

struct CriteriaInput {
  LaurentPoly2 homfly;
  std::optional<LaurentPoly1> jones;      // derived from homfly when absent
  std::optional<LaurentPoly1> alexander;  // derived from homfly for knots
  std::optional<LaurentPoly2> cable_homfly;
  int cable_k = 2;
  std::optional<bool> murakami_excludes_three;
};

struct CriteriaOptions {
  bool mwf = true;
  bool unity_roots = true;
  int root_k_min = 3;
  int root_k_max = 12;
  bool four_braid = true;
  bool cabled = true;
  bool achirality = true;
};

CriterionReport criteria_report(const CriteriaInput& in, const CriteriaOptions& opt = {});

}  // namespace braidkit
