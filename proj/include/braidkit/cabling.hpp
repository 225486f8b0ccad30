#pragma once

#include "braidkit/braid_word.hpp"

namespace braidkit {

/// Closed-braid pattern in the solid torus, a braid on k strands.
struct CablePattern {
  BraidWord pattern;
  int k() const { return pattern.strands(); }
};

/// Positive half twist on k strands: prod_{j=1}^{k-1} prod_{l=1}^{k-j} s_l.
BraidWord half_twist(int k);

/// Replaces every letter by its k-parallel: s_i^e becomes the diamond of
/// k^2 crossings on strands (i-1)k+1 .. (i+1)k. The result is in B_{nk}.
BraidWord parallel_substitute(const BraidWord& w, int k);

/// Zero-framed satellite braid  gamma * {w}^k * Delta_k^{-2[w]}  in B_{nk},
/// with gamma and Delta_k on the lowest k strands. The twist correction is
/// emitted literally, without cancellation against {w}^k.
BraidWord cable_word(const BraidWord& w, const CablePattern& pattern);

/// 2-cable K_{2,writhe}: {w}^2 * s_1^{writhe - 2[w]} in B_{2n}.
BraidWord two_cable(const BraidWord& w, int writhe);

}  // namespace braidkit
