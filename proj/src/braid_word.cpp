#include "braidkit/braid_word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace braidkit {

namespace {

void check_letter(const Letter& l, int strands) {
  if (l.index < 1 || l.index > strands - 1) {
    throw std::invalid_argument("generator index " + std::to_string(l.index) +
                                " out of range for " + std::to_string(strands) + " strands");
  }
  if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +1 or -1");
}

}  // namespace

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw std::invalid_argument("strand count must be at least 1");
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw std::invalid_argument("strand count must be at least 1");
  for (const auto& l : letters_) check_letter(l, strands_);
}

BraidWord BraidWord::positive(int strands, const std::vector<int>& indices) {
  std::vector<Letter> ls;
  ls.reserve(indices.size());
  for (int i : indices) ls.push_back({i, 1});
  return BraidWord(strands, std::move(ls));
}

BraidWord BraidWord::from_tokens(int strands, const std::vector<int>& tokens) {
  std::vector<Letter> ls;
  ls.reserve(tokens.size());
  for (int t : tokens) {
    if (t == 0) throw std::invalid_argument("braid token 0 is not a generator");
    ls.push_back({t > 0 ? t : -t, t > 0 ? 1 : -1});
  }
  return BraidWord(strands, std::move(ls));
}

bool BraidWord::is_positive() const {
  return std::all_of(letters_.begin(), letters_.end(), [](const Letter& l) { return l.sign > 0; });
}

std::vector<int> BraidWord::tokens() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.sign * l.index);
  return out;
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  std::vector<Letter> ls = letters_;
  ls.insert(ls.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(std::max(strands_, rhs.strands_), std::move(ls));
}

BraidWord BraidWord::inverse() const {
  std::vector<Letter> ls;
  ls.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) ls.push_back(it->inverse());
  return BraidWord(strands_, std::move(ls));
}

BraidWord BraidWord::with_strands(int strands) const { return BraidWord(strands, letters_); }

bool operator<(const BraidWord& a, const BraidWord& b) {
  if (a.strands_ != b.strands_) return a.strands_ < b.strands_;
  return std::lexicographical_compare(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                      b.letters_.end());
}

std::size_t WordHash::operator()(const BraidWord& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.strands()) * 0x9e3779b97f4a7c15ULL;
  for (const auto& l : w.letters()) {
    h ^= static_cast<std::size_t>(l.index * 2 + (l.sign > 0)) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

BraidWord parse_word(std::string_view text, std::optional<int> explicit_strands) {
  std::optional<int> prefix_strands;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text.substr(first, 2) == "n=") {
    auto semi = text.find(';', first);
    if (semi == std::string_view::npos) throw std::invalid_argument("strand prefix missing ';'");
    std::string_view num = text.substr(first + 2, semi - first - 2);
    int k = 0;
    auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), k);
    if (ec != std::errc() || p != num.data() + num.size() || k < 1) {
      throw std::invalid_argument("bad strand prefix '" + std::string(num) + "'");
    }
    prefix_strands = k;
    text = text.substr(semi + 1);
  }

  std::vector<int> tokens;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    int v = 0;
    const char* b = tok.data();
    const char* e = tok.data() + tok.size();
    if (*b == '+') ++b;
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || p != e) throw std::invalid_argument("bad braid token '" + tok + "'");
    if (v == 0) throw std::invalid_argument("braid token 0 is not a generator");
    tokens.push_back(v);
  }

  int max_abs = 0;
  for (int t : tokens) max_abs = std::max(max_abs, t < 0 ? -t : t);
  int strands = explicit_strands.value_or(prefix_strands.value_or(max_abs + 1));
  if (strands < 1) throw std::invalid_argument("strand count must be at least 1");
  if (max_abs > strands - 1) {
    throw std::invalid_argument("token " + std::to_string(max_abs) + " exceeds n-1 for n=" +
                                std::to_string(strands));
  }
  return BraidWord::from_tokens(strands, tokens);
}

std::string format_word(const BraidWord& w, bool with_prefix) {
  std::string out;
  if (with_prefix) out = "n=" + std::to_string(w.strands()) + ";";
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first || with_prefix) out += ' ';
    first = false;
    out += std::to_string(l.sign * l.index);
  }
  return out;
}

int exponent_sum(const BraidWord& w) {
  int s = 0;
  for (const auto& l : w.letters()) s += l.sign;
  return s;
}

int generator_exponent(const BraidWord& w, int i) {
  if (i < 1 || i > w.strands() - 1) {
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range");
  }
  int s = 0;
  for (const auto& l : w.letters())
    if (l.index == i) s += l.sign;
  return s;
}

int generator_count(const BraidWord& w, int i) {
  int c = 0;
  for (const auto& l : w.letters())
    if (l.index == i) ++c;
  return c;
}

long index_sum(const BraidWord& w) {
  long s = 0;
  for (const auto& l : w.letters()) s += l.index;
  return s;
}

}  // namespace braidkit
