#include "braidkit/cabling.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace braidkit {

BraidWord half_twist(int k) {
  if (k < 1) throw std::invalid_argument("half twist needs k >= 1");
  std::vector<int> idx;
  for (int j = 1; j <= k - 1; ++j)
    for (int l = 1; l <= k - j; ++l) idx.push_back(l);
  return BraidWord::positive(k, idx);
}

BraidWord parallel_substitute(const BraidWord& w, int k) {
  if (k < 1) throw std::invalid_argument("parallel substitution needs k >= 1");
  if (k == 1) return w;
  std::vector<Letter> out;
  out.reserve(w.length() * static_cast<std::size_t>(k * k));
  for (const auto& l : w.letters()) {
    const int centre = l.index * k;
    for (int row = 1; row <= 2 * k - 1; ++row) {
      const int width = std::min(row, 2 * k - row);
      // generator indices 2j for j = (ik - width + 1)/2 .. (ik + width - 1)/2
      for (int g = centre - width + 1; g <= centre + width - 1; g += 2) out.push_back({g, l.sign});
    }
  }
  return BraidWord(w.strands() * k, std::move(out));
}

BraidWord cable_word(const BraidWord& w, const CablePattern& pattern) {
  const int k = pattern.k();
  const int strands = w.strands() * k;
  const int e = exponent_sum(w);

  std::vector<Letter> out = pattern.pattern.letters();
  const BraidWord body = parallel_substitute(w, k);
  out.insert(out.end(), body.letters().begin(), body.letters().end());

  const BraidWord twist = half_twist(k);
  const BraidWord twist_inv = twist.inverse();
  const BraidWord& unit = e > 0 ? twist_inv : twist;
  for (int rep = 0; rep < 2 * std::abs(e); ++rep)
    out.insert(out.end(), unit.letters().begin(), unit.letters().end());
  return BraidWord(strands, std::move(out));
}

BraidWord two_cable(const BraidWord& w, int writhe) {
  BraidWord body = parallel_substitute(w, 2);
  std::vector<Letter> out = body.letters();
  const int twist = writhe - 2 * exponent_sum(w);
  for (int rep = 0; rep < std::abs(twist); ++rep) out.push_back({1, twist > 0 ? 1 : -1});
  return BraidWord(std::max(2 * w.strands(), 2), std::move(out));
}

}  // namespace braidkit
