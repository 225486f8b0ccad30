#include "braidkit/genus.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "braidkit/homfly.hpp"
#include "braidkit/invariants.hpp"
#include "braidkit/moves.hpp"
#include "braidkit/permutation.hpp"

namespace braidkit {

int positive_genus(const BraidWord& w) {
  if (!w.is_positive()) throw std::invalid_argument("positive_genus needs a positive word");
  if (!is_knot(w)) throw std::invalid_argument("positive_genus needs a knot closure");
  return bennequin_lower(w) / 2;
}

int bennequin_lower(const BraidWord& w) { return exponent_sum(w) - w.strands() + 1; }

BraidWord BandPresentation::reassemble() const {
  std::vector<Letter> out;
  for (const auto& b : bands) {
    out.insert(out.end(), b.conjugator.begin(), b.conjugator.end());
    out.push_back({b.core_index, b.sign});
    for (auto it = b.conjugator.rbegin(); it != b.conjugator.rend(); ++it) out.push_back(it->inverse());
  }
  return BraidWord(strands, std::move(out));
}

std::optional<BandPresentation> band_parse(const BraidWord& w) {
  const auto& L = w.letters();
  const std::size_t n = L.size();
  // next[p]: conjugator length of the band starting at p on a successful
  // parse of the suffix, -1 for a dead end, -2 for not yet known
  std::vector<long> next(n + 1, -2);
  next[n] = 0;

  auto band_at = [&](std::size_t p, std::size_t len) {
    if (p + 2 * len + 1 > n) return false;
    if (L[p + len].sign != 1) return false;
    for (std::size_t i = 0; i < len; ++i) {
      if (L[p + 2 * len - i] != L[p + i].inverse()) return false;
    }
    return true;
  };

  // fill from the right so each suffix is decided once
  for (std::size_t q = n; q-- > 0;) {
    next[q] = -1;
    for (std::size_t len = (n - q - 1) / 2 + 1; len-- > 0;) {
      if (band_at(q, len) && next[q + 2 * len + 1] != -1) {
        next[q] = static_cast<long>(len);
        break;
      }
    }
  }
  if (n > 0 && next[0] == -1) return std::nullopt;

  BandPresentation out;
  out.strands = w.strands();
  for (std::size_t p = 0; p < n;) {
    auto len = static_cast<std::size_t>(next[p]);
    Band b;
    b.conjugator.assign(L.begin() + static_cast<long>(p), L.begin() + static_cast<long>(p + len));
    b.core_index = L[p + len].index;
    b.sign = 1;
    out.bands.push_back(std::move(b));
    p += 2 * len + 1;
  }
  return out;
}

std::string format_bands(const BandPresentation& bp) {
  std::ostringstream out;
  bool first = true;
  for (const auto& b : bp.bands) {
    if (!first) out << ' ';
    first = false;
    if (b.conjugator.empty()) {
      out << b.core_index;
      continue;
    }
    out << '(';
    for (const auto& l : b.conjugator) out << l.sign * l.index << ' ';
    out << b.core_index;
    for (auto it = b.conjugator.rbegin(); it != b.conjugator.rend(); ++it) out << ' ' << -it->sign * it->index;
    out << ')';
  }
  return out.str();
}

std::optional<ConjugateBands> band_parse_conjugate(const BraidWord& w, std::size_t budget) {
  std::unordered_set<BraidWord, WordHash> seen{w};
  std::deque<BraidWord> queue{w};
  while (!queue.empty()) {
    BraidWord u = std::move(queue.front());
    queue.pop_front();
    if (auto b = band_parse(u)) return ConjugateBands{u, *b};
    for (auto& next : neighbors(u, {MoveKind::Commute, MoveKind::CyclicShift})) {
      if (seen.size() >= budget) break;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

MortonCheck morton_conjecture_check(const BraidWord& w) {
  if (!is_knot(w)) throw std::invalid_argument("Morton check needs a knot closure");
  MortonCheck r;
  r.lower = bennequin_lower(w);
  r.min_deg_v = degree_stats(homfly(w)).min_deg_v;
  auto bands = band_parse_conjugate(w);
  if (!bands) return r;
  r.upper = bands->bands.one_minus_chi();
  if (*r.upper != r.lower) return r;
  r.verdict = r.min_deg_v > r.lower ? MortonVerdict::Violated : MortonVerdict::Consistent;
  return r;
}

CanonicalGenusCheck canonical_genus_check(const BraidWord& w) {
  if (!is_knot(w)) throw std::invalid_argument("canonical genus check needs a knot closure");
  CanonicalGenusCheck c;
  c.max_deg_z = degree_stats(homfly(w)).max_deg_z;
  c.diagram_bound = static_cast<int>(w.length()) - w.strands() + 1;
  return c;
}

const char* to_string(MortonVerdict v) {
  switch (v) {
    case MortonVerdict::Violated: return "VIOLATED";
    case MortonVerdict::Consistent: return "CONSISTENT";
    case MortonVerdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

}  // namespace braidkit
