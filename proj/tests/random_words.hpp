#pragma once

#include <doctest.h>

#include <random>
#include <vector>

#include "braidkit/braid_word.hpp"

namespace testutil {

using Rng = std::mt19937_64;

inline braidkit::BraidWord random_word(Rng& rng, int n, int len, bool positive = false) {
  std::uniform_int_distribution<int> gen(1, n - 1), coin(0, 1);
  std::vector<int> tokens;
  for (int i = 0; i < len; ++i) tokens.push_back((positive || coin(rng)) ? gen(rng) : -gen(rng));
  return braidkit::BraidWord::from_tokens(n, tokens);
}

// strands in [2, max_strands], length in [0, max_letters]
inline braidkit::BraidWord random_word_upto(Rng& rng, int max_strands, int max_letters, bool positive = false) {
  const int n = std::uniform_int_distribution<int>(2, max_strands)(rng);
  const int len = std::uniform_int_distribution<int>(0, max_letters)(rng);
  return random_word(rng, n, len, positive);
}

}  // namespace testutil

namespace doctest {
template <>
struct StringMaker<braidkit::BraidWord> {
  static String convert(const braidkit::BraidWord& w) { return braidkit::format_word(w, true).c_str(); }
};
}  // namespace doctest
