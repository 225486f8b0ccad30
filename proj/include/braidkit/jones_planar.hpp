#pragma once

#include "braidkit/braid_word.hpp"
#include "braidkit/laurent.hpp"

namespace braidkit {

/// Jones polynomial by a route independent of the skein engine: the braid
/// acts on the planar basis of non-crossing pairings (dimension
/// Catalan(strands)) through the bracket relation
///   s_i = A + A^{-1} e_i,  loop = -A^2 - A^{-2},
/// the closure is evaluated by loop counting and the result is normalised by
/// writhe. Returned in s = t^{1/2}, same convention as jones().
LaurentPoly1 jones_planar(const BraidWord& w);

/// Number of non-crossing pairings of 2n points (the n-th Catalan number).
std::size_t planar_basis_dimension(int n);

}  // namespace braidkit
