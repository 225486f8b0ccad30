#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "braidkit/braid_word.hpp"

namespace braidkit {

enum class IndexSum { Minimal, Maximal };

/// Which rewriting moves identify two positive words, and how the
/// representative of a class is chosen: extremal generator-index sum first,
/// then lexicographically smallest.
struct CanonicalPolicy {
  IndexSum index_sum = IndexSum::Minimal;
  bool cyclic = true;
  bool flip = true;
  bool commute = true;
  bool yang_baxter = true;
  /// Classes larger than this are cut off; the representative is then the
  /// best word seen.
  std::size_t class_limit = std::size_t{1} << 18;

  /// Rotations only (plus flips if `with_flip`), no relations.
  static CanonicalPolicy orbit_only(bool with_flip = true);
  /// Maximal index sum, rotations, commutations and YB, no flips.
  static CanonicalPolicy max_digit_sum();
};

BraidWord canonicalize(const BraidWord& w, const CanonicalPolicy& policy = {});

/// All positive words reachable from w under the policy's moves, capped at
/// policy.class_limit. Sorted.
std::vector<BraidWord> positive_class(const BraidWord& w, const CanonicalPolicy& policy = {});

/// Every positive n-strand word of length c that uses each generator, one per
/// class (the class representative). Sorted. With jobs > 1 the work is split
/// by first letter; the output does not depend on jobs.
std::vector<BraidWord> enumerate_positive(int n, int c, const CanonicalPolicy& policy = {}, int jobs = 1);

enum class ClosureVerdict { Knot, NonKnot, Composite };
const char* to_string(ClosureVerdict v);

/// Knot, non-knot, or (syntactically) composite: some conjugate reachable by
/// YB, commutation and rotation within `budget` states has a generator that
/// occurs exactly once, or splits as A B with A on generators < k and B on
/// generators > k after commuting the k's apart.
ClosureVerdict composite_or_disconnected_filter(const BraidWord& w, std::size_t budget = 20000);

/// Applies YB, commutations, rotations and deletion of squares of the
/// `designated` generators. True if some reachable word lacks one of the
/// designated generators entirely, which shows the closure is disconnected.
bool square_elimination_disconnects(const BraidWord& w, const std::vector<int>& designated,
                                    std::size_t budget = 200000);

struct ReductionResult {
  BraidWord best_word;
  std::size_t states_explored = 0;
  int moves_applied = 0;  // destabilisations performed
  bool budget_exhausted = false;
};

/// Searches positive conjugates (YB, commutation, rotation, flip) and removes
/// a top or bottom generator whenever it occurs exactly once. Returns the
/// word with fewest strands found. Throws for budget 0 or a non-positive word.
ReductionResult reduction_search(const BraidWord& w, std::size_t budget);

/// True if deleting s_i^3 blocks together with YB, commutations and rotations
/// empties the word within `budget` states.
bool three_move_reduce(const BraidWord& w, std::size_t budget = 200000);

/// |V(e^{pi i/3})| = sqrt(3)^{n-1} within 1e-6, by the invariant engine.
bool irreducible_certificate(const BraidWord& w);

/// The same condition read off the 3-colouring representation: the braid acts
/// trivially on colourings mod 3. Exact and cheap; used to pre-filter searches.
bool colouring_certificate(const BraidWord& w);

/// Some certificate that the closure has braid index n: the one above, or the
/// MWF bound reaching n. For a positive word this means no positive word on
/// fewer strands (equivalently with fewer letters) has the same closure.
bool minimality_certificate(const BraidWord& w);

/// Explicit positive n-braids (n >= 4) of 9n/2 - 3/2((n+1) mod 4 + 1) letters
/// carrying irreducible_certificate.
BraidWord thdn_family(int n);
/// ((s1 s3 .. s_{n-4} s_{n-2}^3)(s2^3 s4 .. s_{n-3} s_{n-1}))^2 for odd n >= 5.
BraidWord beta_family(int n);
int thdn_length(int n);

struct DnResult {
  int n = 0;
  std::optional<int> d;        // least c with a certified prime knot word
  std::optional<BraidWord> witness;
  int searched_up_to = 0;
  std::string note;
};

/// Searches c = 1 .. c_max for a positive n-strand word whose closure is a
/// knot, not composite, and carries minimality_certificate. Inconclusive (no d) when
/// none is found up to c_max.
DnResult d_n_pipeline(int n, int c_max, int jobs = 1);

struct Exhaust9Options {
  bool letter_count_filter = true;
  bool composite_filter = true;
  bool connectedness_test = true;
};

struct Exhaust9Stats {
  std::size_t generated = 0;
  std::size_t canonical = 0;
  std::size_t after_counts = 0;
  std::size_t after_composite = 0;
  std::size_t survivors = 0;
};

/// The length-9 exhaustion over letters 1, 2, 3 used for the d_n lower bound.
std::vector<BraidWord> exhaust_length9(const Exhaust9Options& opt = {}, Exhaust9Stats* stats = nullptr);

/// {1,2,3}-subword (on 4 strands) and {3,4,5}-subword (on 6 strands).
std::pair<BraidWord, BraidWord> subword_split(const BraidWord& w);
/// Inverse of subword_split: the {1,2} segment between consecutive 3's of b1
/// is followed by the {4,5} segment between the same 3's of b2.
BraidWord subword_compose(const BraidWord& b1, const BraidWord& b2);

struct SizeProfile {
  int first = 0;   // [b1]
  int shared = 0;  // [b]_3
  int second = 0;  // [b2]
  friend bool operator==(const SizeProfile&, const SizeProfile&) = default;
};

/// Length splits of a `crossings`-letter irreducible 6-braid into its two
/// subwords, up to the flip exchanging them (listed with first <= second).
std::vector<SizeProfile> subword_size_profiles(int crossings, int min_subword = 10);

struct CensusRecord {
  BraidWord word;
  int crossings = 0;
  int strands = 0;
  bool is_knot = false;
  bool composite = false;
  std::optional<BraidWord> reduction;
  bool irreducible_certified = false;
};

std::string format_record(const CensusRecord& r);
CensusRecord parse_record(const std::string& line);

struct CensusOptions {
  CanonicalPolicy policy;
  int jobs = 1;
  std::size_t reduction_budget = 20000;
  /// Called after each finished prefix with (done, total).
  std::function<void(std::size_t, std::size_t)> progress;
};

CensusRecord make_record(const BraidWord& w, std::size_t reduction_budget);

/// Census of n-strand positive words of length c. Records for each first
/// letter are checkpointed to `<path>.part<letter>` and reused on restart;
/// the final file is sorted by canonical word.
std::vector<CensusRecord> run_census(int n, int c, const std::string& path, const CensusOptions& opt = {});

}  // namespace braidkit
