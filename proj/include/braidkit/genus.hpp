#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidkit/braid_word.hpp"

namespace braidkit {

/// Genus of the closure of a positive braid with knot closure, ([b] - n + 1) / 2.
/// Throws std::invalid_argument otherwise.
int positive_genus(const BraidWord& w);

/// [b] - n + 1, a lower bound for 1 - chi of the closure.
int bennequin_lower(const BraidWord& w);

/// A factor u * s_core^sign * u^{-1} of a band presentation.
struct Band {
  std::vector<Letter> conjugator;
  int core_index = 1;
  int sign = 1;
};

struct BandPresentation {
  int strands = 1;
  std::vector<Band> bands;

  /// Concatenation of all bands, letter for letter.
  BraidWord reassemble() const;
  /// 1 - chi of the surface built from the strand discs and the bands.
  int one_minus_chi() const { return static_cast<int>(bands.size()) - strands + 1; }
};

/// Factorisation of w into positive bands u s_i u^{-1}. Longer conjugators are
/// tried first and dead ends are memoised, so the parse is found whenever one
/// exists. Absent when w is not such a product letter for letter.
std::optional<BandPresentation> band_parse(const BraidWord& w);

std::string format_bands(const BandPresentation& b);

struct ConjugateBands {
  BraidWord word;  // the rewritten word that parses
  BandPresentation bands;
};

/// band_parse on w and on words reached by far commutations and rotations,
/// breadth first, up to `budget` words. These moves keep the closed braid
/// diagram, so the band surface spans the same knot.
std::optional<ConjugateBands> band_parse_conjugate(const BraidWord& w, std::size_t budget = 100000);

enum class MortonVerdict { Violated, Consistent, Inconclusive };

struct MortonCheck {
  MortonVerdict verdict = MortonVerdict::Inconclusive;
  int min_deg_v = 0;
  int lower = 0;  // Bennequin
  std::optional<int> upper;  // band surface, when the parse succeeds
};

/// Compares min deg_v P with 1 - chi whenever the band surface and the
/// Bennequin bound pin 1 - chi exactly. Requires a knot closure.
MortonCheck morton_conjecture_check(const BraidWord& w);

struct CanonicalGenusCheck {
  int max_deg_z = 0;
  int diagram_bound = 0;  // letters - strands + 1
  int slack() const { return diagram_bound - max_deg_z; }
  bool holds() const { return slack() >= 0; }
};

/// max deg_z P against 1 - chi of the canonical Seifert surface of the
/// closed braid diagram.
CanonicalGenusCheck canonical_genus_check(const BraidWord& w);

const char* to_string(MortonVerdict v);

}  // namespace braidkit
