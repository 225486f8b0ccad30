#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidkit {

/// A signed Artin generator. `index` is 1-based; `sign` is +1 or -1.
struct Letter {
  int index = 1;
  int sign = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  Letter inverse() const { return {index, -sign}; }
};

/// Lexicographic order on letters used for canonical forms: by index, then
/// negative before positive.
inline bool operator<(const Letter& a, const Letter& b) {
  if (a.index != b.index) return a.index < b.index;
  return a.sign < b.sign;
}

/// A braid word on `strands()` strands. Values are immutable in practice:
/// every rewriting operation returns a new word.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands);
  BraidWord(int strands, std::vector<Letter> letters);

  /// Positive word from generator indices, e.g. {1, 1, 1}.
  static BraidWord positive(int strands, const std::vector<int>& indices);
  /// Word from signed tokens, e.g. {1, -2, 3}.
  static BraidWord from_tokens(int strands, const std::vector<int>& tokens);

  int strands() const { return strands_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  bool is_positive() const;
  std::vector<int> tokens() const;

  /// Concatenation; the result lives on max(strands) strands.
  BraidWord operator*(const BraidWord& rhs) const;
  BraidWord inverse() const;
  BraidWord with_strands(int strands) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend bool operator<(const BraidWord& a, const BraidWord& b);

 private:
  int strands_ = 1;
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const BraidWord& w) const noexcept;
};

/// Parses the braid-word text format: whitespace-separated signed nonzero
/// integers, optionally prefixed by "n=<k>;". An explicit strand count wins
/// over the prefix.
BraidWord parse_word(std::string_view text, std::optional<int> explicit_strands = std::nullopt);

/// Inverse of parse_word. With `with_prefix` the strand count is pinned.
std::string format_word(const BraidWord& w, bool with_prefix = false);

int exponent_sum(const BraidWord& w);
int generator_exponent(const BraidWord& w, int i);
/// Unsigned occurrence count of generator i.
int generator_count(const BraidWord& w, int i);
/// Sum of generator indices over all letters.
long index_sum(const BraidWord& w);

}  // namespace braidkit
