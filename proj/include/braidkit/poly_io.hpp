#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "braidkit/laurent.hpp"

namespace braidkit {

/// One line per z-degree, ascending:
///   z^k : <v-exponent>:<coefficient> ...
/// Blank lines and lines starting with '#' are ignored by the reader.
std::string write_homfly_text(const LaurentPoly2& p);
LaurentPoly2 read_homfly_text(std::string_view text);

/// Reads a skein polynomial block in the KnotScape table layout:
///   <crossings> <number> <min z-degree> <max z-degree>
///   <min v> <max v> <coefficients, v-step 2>     (one row per z-degree, step 2)
/// The table uses the (l, m) convention; coefficients are converted to the
/// (v, z) convention here by the sign (-1)^{(a+b)/2} on v^a z^b.
LaurentPoly2 read_knotscape_homfly(std::string_view text);

/// Reads a Jones row  <crossings> <number> <min t-degree> <max t-degree> <coefficients>
/// and returns V in s = t^{1/2}.
LaurentPoly1 read_knotscape_jones(std::string_view text);

LaurentPoly2 read_homfly_file(const std::string& path);

}  // namespace braidkit
