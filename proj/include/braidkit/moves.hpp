#pragma once

#include <optional>
#include <set>
#include <vector>

#include "braidkit/braid_word.hpp"

namespace braidkit {

enum class MoveKind {
  YBForward,   // s_i s_{i+1} s_i -> s_{i+1} s_i s_{i+1}
  YBBackward,  // s_{i+1} s_i s_{i+1} -> s_i s_{i+1} s_i
  Commute,     // s_i s_j -> s_j s_i, |i - j| > 1
  CyclicShift,
  Flip,  // s_i -> s_{n-i}
  Stabilize,
  Destabilize,
  FreeCancel,
};

using MoveSet = std::set<MoveKind>;

/// All words one move away from `w`, for each requested kind and position.
/// Result is sorted and free of duplicates; `w` itself is never included.
std::vector<BraidWord> neighbors(const BraidWord& w, const MoveSet& kinds);

BraidWord rotate(const BraidWord& w, std::size_t shift);
BraidWord flip(const BraidWord& w);

/// Appends s_n^{sign}, viewing the result in B_{n+1}.
BraidWord stabilize(const BraidWord& w, int sign);
/// Removes the unique s_{n-1}^{+-1} after rotating it to the end; absent
/// unless s_{n-1} occurs exactly once.
std::optional<BraidWord> destabilize(const BraidWord& w);

/// Same for s_1: the result is shifted down one index.
std::optional<BraidWord> destabilize_bottom(const BraidWord& w);

}  // namespace braidkit
