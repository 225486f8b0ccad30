#pragma once

#include <vector>

#include "braidkit/braid_word.hpp"

namespace braidkit {

/// A bijection on {0..n-1} stored as its image table. Composition follows
/// function order: (a * b)(x) = a(b(x)).
class Permutation {
 public:
  explicit Permutation(int n = 0);
  explicit Permutation(std::vector<int> images);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  /// Swap the images of positions i and i+1 (right multiplication by s_i).
  void swap_adjacent(int i) { std::swap(images_[i], images_[i + 1]); }

  int cycle_count() const;
  /// +1 for even, -1 for odd permutations.
  int sign() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Underlying permutation of a braid: sigma_i^{+-1} maps to the
/// transposition of strands i and i+1.
Permutation underlying_permutation(const BraidWord& w);

/// Number of components of the closure.
int closure_components(const BraidWord& w);

inline bool is_knot(const BraidWord& w) { return closure_components(w) == 1; }

}  // namespace braidkit
