#include "braidkit/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace braidkit {

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= size() || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = 1;
  }
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.size() != size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(images_.size());
  for (int x = 0; x < size(); ++x) out[x] = images_[rhs.images_[x]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (int x = 0; x < size(); ++x) out[images_[x]] = x;
  return Permutation(std::move(out));
}

int Permutation::cycle_count() const {
  std::vector<char> seen(images_.size(), 0);
  int cycles = 0;
  for (int s = 0; s < size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (int x = s; !seen[x]; x = images_[x]) seen[x] = 1;
  }
  return cycles;
}

int Permutation::sign() const { return (size() - cycle_count()) % 2 == 0 ? 1 : -1; }

Permutation underlying_permutation(const BraidWord& w) {
  Permutation p(w.strands());
  for (const auto& l : w.letters()) p.swap_adjacent(l.index - 1);
  return p;
}

int closure_components(const BraidWord& w) { return underlying_permutation(w).cycle_count(); }

}  // namespace braidkit
