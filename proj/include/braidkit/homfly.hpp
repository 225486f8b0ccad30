#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>

#include "braidkit/braid_word.hpp"
#include "braidkit/laurent.hpp"

namespace braidkit {

/// The engine refused an input that would exceed its resource budget.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EngineBudget {
  /// Largest strand count accepted; the dense basis has strands! entries.
  int max_strands = 9;
  /// Approximate byte cap for the trace memo shared by all evaluations.
  std::size_t max_memo_bytes = std::size_t{1} << 30;
};

/// Skein polynomial of braid closures, normalised by
///   v^{-1} P(L+) - v P(L-) = z P(L0),  P(unknot) = 1.
///
/// A braid word is expanded in the Hecke algebra over Z[v^+-1, z] on the
/// basis of positive permutation braids, using
///   s_i^2 = v z s_i + v^2,   s_i^{-1} = v^{-2} s_i - v^{-1} z,
/// and closed with the Markov trace. Traces of permutation braids are
/// memoised process-wide per strand count; the memo is guarded by a
/// shared mutex so concurrent evaluations are safe.
class HomflyEngine {
 public:
  explicit HomflyEngine(EngineBudget budget = {});
  ~HomflyEngine();
  HomflyEngine(const HomflyEngine&) = delete;
  HomflyEngine& operator=(const HomflyEngine&) = delete;

  LaurentPoly2 homfly(const BraidWord& w) const;

  std::size_t memo_entries() const;
  std::size_t memo_bytes() const;

  /// Shared default instance; honours BRAIDKIT_MEMO_BYTES when first used.
  static HomflyEngine& shared();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Convenience wrapper over HomflyEngine::shared().
LaurentPoly2 homfly(const BraidWord& w);

/// The value of the n-component unlink, ((v^{-1} - v) / z)^{n-1}.
LaurentPoly2 unlink_value(int components);

}  // namespace braidkit
