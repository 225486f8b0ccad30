#include "braidkit/census.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <mutex>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "braidkit/criteria.hpp"
#include "braidkit/homfly.hpp"
#include "braidkit/invariants.hpp"
#include "braidkit/permutation.hpp"

namespace braidkit {

namespace {

// Positive words are handled internally as strings of generator indices.
using Code = std::string;

Code to_code(const BraidWord& w) {
  Code c;
  c.reserve(w.length());
  for (const auto& l : w.letters()) {
    if (l.sign != 1) throw std::invalid_argument("positive word expected: " + format_word(w));
    c.push_back(static_cast<char>(l.index));
  }
  return c;
}

BraidWord from_code(const Code& c, int n) {
  std::vector<Letter> letters;
  letters.reserve(c.size());
  for (char ch : c) letters.push_back({static_cast<int>(ch), 1});
  return BraidWord(n, std::move(letters));
}

Code min_rotation(const Code& s) {
  Code best = s;
  Code doubled = s + s;
  for (std::size_t r = 1; r < s.size(); ++r) {
    if (doubled.compare(r, s.size(), best) < 0) best = doubled.substr(r, s.size());
  }
  return best;
}

Code flip_code(const Code& s, int n) {
  Code out = s;
  for (auto& ch : out) ch = static_cast<char>(n - ch);
  return out;
}

long code_sum(const Code& s) {
  long t = 0;
  for (char ch : s) t += ch;
  return t;
}

int count_of(const Code& s, int i) { return static_cast<int>(std::count(s.begin(), s.end(), static_cast<char>(i))); }

struct Moves {
  bool cyclic = true;
  bool flip = false;
  bool commute = true;
  bool yb = true;
};

Code normalise(const Code& s, int n, const Moves& m) {
  if (!m.cyclic) return m.flip ? std::min(s, flip_code(s, n)) : s;
  Code r = min_rotation(s);
  if (m.flip) r = std::min(r, min_rotation(flip_code(s, n)));
  return r;
}

/// One-step rewrites by commutation and YB, at every (cyclic) position.
template <class F>
void for_each_rewrite(const Code& s, const Moves& m, F&& emit) {
  const std::size_t L = s.size();
  if (L < 2) return;
  const std::size_t positions = m.cyclic ? L : L - 1;
  for (std::size_t p = 0; p < positions; ++p) {
    const std::size_t q = (p + 1) % L;
    if (m.commute && std::abs(s[p] - s[q]) > 1) {
      Code t = s;
      std::swap(t[p], t[q]);
      emit(t);
    }
    if (m.yb && L >= 3 && (m.cyclic || p + 2 < L)) {
      const std::size_t r = (p + 2) % L;
      if (s[p] == s[r] && std::abs(s[p] - s[q]) == 1) {
        Code t = s;
        t[p] = t[r] = s[q];
        t[q] = s[p];
        emit(t);
      }
    }
  }
}

/// Breadth-first closure of `start` under the moves, on normalised words.
/// `visit` may return true to stop early. Returns false if `limit` cut the
/// search short.
template <class F>
bool explore(const Code& start, int n, const Moves& m, std::size_t limit, F&& visit,
             std::vector<Code>* all = nullptr) {
  std::unordered_set<Code> seen;
  std::deque<Code> queue;
  Code s0 = normalise(start, n, m);
  seen.insert(s0);
  queue.push_back(s0);
  while (!queue.empty()) {
    Code s = std::move(queue.front());
    queue.pop_front();
    if (all) all->push_back(s);
    if (visit(s)) return true;
    bool cut = false;
    for_each_rewrite(s, m, [&](const Code& t) {
      if (cut) return;
      Code k = normalise(t, n, m);
      if (seen.count(k)) return;
      if (seen.size() >= limit) {
        cut = true;
        return;
      }
      seen.insert(k);
      queue.push_back(std::move(k));
    });
    if (cut) return false;
  }
  return true;
}

Moves moves_of(const CanonicalPolicy& p) { return {p.cyclic, p.flip, p.commute, p.yang_baxter}; }

/// Best representative by policy among the members of one normalised state.
bool better(const Code& a, const Code& b, IndexSum mode) {
  long sa = code_sum(a), sb = code_sum(b);
  if (sa != sb) return mode == IndexSum::Minimal ? sa < sb : sa > sb;
  return a < b;
}

Code best_member(const Code& state, int n, const CanonicalPolicy& p) {
  Code best = p.cyclic ? min_rotation(state) : state;
  if (p.flip) {
    Code f = flip_code(state, n);
    if (p.cyclic) f = min_rotation(f);
    if (better(f, best, p.index_sum)) best = f;
  }
  return best;
}

Code canonical_code(const Code& s, int n, const CanonicalPolicy& p) {
  Moves m = moves_of(p);
  Code best;
  bool have = false;
  explore(s, n, m, p.class_limit, [&](const Code& st) {
    Code b = best_member(st, n, p);
    if (!have || better(b, best, p.index_sum)) {
      best = b;
      have = true;
    }
    return false;
  });
  return best;
}

/// Cheap necessary conditions for `s` to be its own canonical form.
bool may_be_canonical(const Code& s, const CanonicalPolicy& p) {
  if (p.cyclic && min_rotation(s) != s) return false;
  const std::size_t L = s.size();
  for (std::size_t i = 0; i + 1 < L; ++i) {
    if (p.commute && std::abs(s[i] - s[i + 1]) > 1 && s[i] > s[i + 1]) return false;
    if (p.yang_baxter && i + 2 < L && s[i] == s[i + 2]) {
      int d = s[i + 1] - s[i];
      if (p.index_sum == IndexSum::Minimal && d == -1) return false;
      if (p.index_sum == IndexSum::Maximal && d == 1) return false;
    }
  }
  return true;
}

/// Calls f on every word over 1..g of length c in lexicographic order, with
/// the first letter fixed to `first` when first > 0.
template <class F>
void for_each_word(int g, int c, int first, F&& f) {
  if (c == 0) {
    f(Code{});
    return;
  }
  Code s(static_cast<std::size_t>(c), 1);
  if (first > 0) s[0] = static_cast<char>(first);
  for (;;) {
    f(s);
    int pos = c - 1;
    while (pos >= (first > 0 ? 1 : 0) && s[static_cast<std::size_t>(pos)] == g) {
      s[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < (first > 0 ? 1 : 0)) return;
    ++s[static_cast<std::size_t>(pos)];
  }
}

bool uses_all(const Code& s, int n) {
  for (int i = 1; i < n; ++i)
    if (s.find(static_cast<char>(i)) == Code::npos) return false;
  return true;
}

// 3-colouring action mod 3. A positive crossing sends the colours (a, b) on
// strands i, i+1 to (2a - b, a).
using ColourMatrix = std::vector<std::uint8_t>;

void apply_colour(ColourMatrix& m, int n, int i) {
  // rows index strands; act on the right: columns i-1, i
  for (int r = 0; r < n; ++r) {
    auto& a = m[static_cast<std::size_t>(r * n + i - 1)];
    auto& b = m[static_cast<std::size_t>(r * n + i)];
    std::uint8_t na = static_cast<std::uint8_t>((2 * a + 2 * b) % 3);  // 2a - b = 2a + 2b mod 3
    b = a;
    a = na;
  }
}

ColourMatrix identity_colour(int n) {
  ColourMatrix m(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
  return m;
}

/// A generator occurring once, or some k whose letters k and k+1 form just one
/// cyclic run each: the word then commutes into A B with A on strands
/// 1..k+1 and B on strands k+1..n, a connected sum.
bool has_split(const Code& s, int n) {
  for (int i = 1; i < n; ++i)
    if (count_of(s, i) == 1) return true;
  for (int k = 1; k + 1 < n; ++k) {
    Code sub;
    for (char ch : s)
      if (ch == k || ch == k + 1) sub.push_back(ch);
    int runs = 0;
    for (std::size_t i = 0; i < sub.size(); ++i)
      if (sub[i] != sub[(i + sub.size() - 1) % sub.size()]) ++runs;
    if (runs <= 2) return true;
  }
  return false;
}

}  // namespace

CanonicalPolicy CanonicalPolicy::orbit_only(bool with_flip) {
  CanonicalPolicy p;
  p.flip = with_flip;
  p.commute = false;
  p.yang_baxter = false;
  return p;
}

CanonicalPolicy CanonicalPolicy::max_digit_sum() {
  CanonicalPolicy p;
  p.index_sum = IndexSum::Maximal;
  p.flip = false;
  return p;
}

BraidWord canonicalize(const BraidWord& w, const CanonicalPolicy& policy) {
  if (!w.is_positive()) throw std::invalid_argument("canonicalize needs a positive word");
  return from_code(canonical_code(to_code(w), w.strands(), policy), w.strands());
}

std::vector<BraidWord> positive_class(const BraidWord& w, const CanonicalPolicy& policy) {
  Moves m = moves_of(policy);
  m.flip = false;  // flips are added as separate members below
  std::vector<Code> states;
  explore(to_code(w), w.strands(), m, policy.class_limit, [](const Code&) { return false; }, &states);
  std::vector<Code> members;
  for (const auto& s : states) {
    if (policy.cyclic) {
      for (std::size_t r = 0; r < std::max<std::size_t>(1, s.size()); ++r) {
        Code t = s.empty() ? s : s.substr(r) + s.substr(0, r);
        members.push_back(t);
        if (policy.flip) members.push_back(flip_code(t, w.strands()));
      }
    } else {
      members.push_back(s);
      if (policy.flip) members.push_back(flip_code(s, w.strands()));
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<BraidWord> out;
  for (const auto& s : members) out.push_back(from_code(s, w.strands()));
  return out;
}

std::vector<BraidWord> enumerate_positive(int n, int c, const CanonicalPolicy& policy, int jobs) {
  if (n < 2 || c < 0) throw std::invalid_argument("enumerate_positive needs n >= 2, c >= 0");
  const int g = n - 1;
  std::vector<std::vector<Code>> parts(static_cast<std::size_t>(g));
  auto work = [&](int first) {
    auto& out = parts[static_cast<std::size_t>(first - 1)];
    for_each_word(g, c, first, [&](const Code& s) {
      if (!uses_all(s, n) || !may_be_canonical(s, policy)) return;
      if (canonical_code(s, n, policy) == s) out.push_back(s);
    });
  };
  if (c == 0) return {};
  std::vector<std::thread> pool;
  std::mutex mu;
  int next = 1;
  auto worker = [&] {
    for (;;) {
      int first;
      {
        std::lock_guard lock(mu);
        if (next > g) return;
        first = next++;
      }
      work(first);
    }
  };
  for (int j = 0; j < std::max(1, jobs); ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::vector<BraidWord> out;
  for (const auto& part : parts)
    for (const auto& s : part) out.push_back(from_code(s, n));
  std::sort(out.begin(), out.end());
  return out;
}

const char* to_string(ClosureVerdict v) {
  switch (v) {
    case ClosureVerdict::Knot: return "knot";
    case ClosureVerdict::NonKnot: return "non-knot";
    case ClosureVerdict::Composite: return "composite";
  }
  return "?";
}

ClosureVerdict composite_or_disconnected_filter(const BraidWord& w, std::size_t budget) {
  if (!w.is_positive()) throw std::invalid_argument("positive word expected");
  if (closure_components(w) != 1) return ClosureVerdict::NonKnot;
  const int n = w.strands();
  bool split = false;
  explore(to_code(w), n, Moves{}, budget, [&](const Code& s) {
    split = has_split(s, n);
    return split;
  });
  return split ? ClosureVerdict::Composite : ClosureVerdict::Knot;
}

bool square_elimination_disconnects(const BraidWord& w, const std::vector<int>& designated, std::size_t budget) {
  const int n = w.strands();
  const Moves m{};
  std::unordered_set<Code> seen;
  std::deque<Code> queue;
  Code s0 = normalise(to_code(w), n, m);
  seen.insert(s0);
  queue.push_back(s0);
  auto push = [&](const Code& t) {
    Code k = normalise(t, n, m);
    if (seen.size() < budget && seen.insert(k).second) queue.push_back(std::move(k));
  };
  while (!queue.empty()) {
    Code s = std::move(queue.front());
    queue.pop_front();
    for (int d : designated)
      if (count_of(s, d) == 0) return true;
    for_each_rewrite(s, m, push);
    const std::size_t L = s.size();
    for (std::size_t p = 0; p < L && L >= 2; ++p) {
      const std::size_t q = (p + 1) % L;
      if (s[p] != s[q] || std::find(designated.begin(), designated.end(), s[p]) == designated.end()) continue;
      Code t;
      for (std::size_t i = 0; i < L; ++i)
        if (i != p && i != q) t.push_back(s[i]);
      push(t);
    }
  }
  return false;
}

namespace {

/// Removes a top or bottom generator occurring exactly once.
std::optional<std::pair<Code, int>> destabilise_code(const Code& s, int n) {
  if (n < 2) return std::nullopt;
  if (count_of(s, n - 1) == 1) {
    Code t;
    for (char ch : s)
      if (ch != n - 1) t.push_back(ch);
    return std::make_pair(t, n - 1);
  }
  if (count_of(s, 1) == 1) {
    Code t;
    for (char ch : s)
      if (ch != 1) t.push_back(static_cast<char>(ch - 1));
    return std::make_pair(t, n - 1);
  }
  return std::nullopt;
}

}  // namespace

ReductionResult reduction_search(const BraidWord& w, std::size_t budget) {
  if (budget == 0) throw std::invalid_argument("reduction budget must be positive");
  Code cur = to_code(w);
  int n = w.strands();
  ReductionResult res;
  const Moves m{true, true, true, true};

  for (;;) {
    while (auto d = destabilise_code(cur, n)) {
      std::tie(cur, n) = *d;
      ++res.moves_applied;
    }
    if (n <= 1 || res.states_explored >= budget) {
      res.budget_exhausted = n > 1;
      break;
    }
    std::optional<Code> found;
    std::size_t before = res.states_explored;
    bool complete = explore(cur, n, m, budget - before, [&](const Code& s) {
      ++res.states_explored;
      if (destabilise_code(s, n)) {
        found = s;
        return true;
      }
      return false;
    });
    if (found) {
      cur = *found;
      continue;
    }
    res.budget_exhausted = !complete;
    break;
  }
  res.best_word = from_code(normalise(cur, n, Moves{true, false, false, false}), n);
  return res;
}

bool three_move_reduce(const BraidWord& w, std::size_t budget) {
  const int n = w.strands();
  const Moves m{};
  // shortest words first; deletions only ever shorten
  auto cmp = [](const Code& a, const Code& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a > b;
  };
  std::priority_queue<Code, std::vector<Code>, decltype(cmp)> queue(cmp);
  std::unordered_set<Code> seen;
  Code s0 = normalise(to_code(w), n, m);
  seen.insert(s0);
  queue.push(s0);
  auto push = [&](const Code& t) {
    Code k = normalise(t, n, m);
    if (seen.size() < budget && seen.insert(k).second) queue.push(std::move(k));
  };
  while (!queue.empty()) {
    Code s = queue.top();
    queue.pop();
    if (s.empty()) return true;
    const std::size_t L = s.size();
    for (std::size_t p = 0; p < L && L >= 3; ++p) {
      if (s[p] == s[(p + 1) % L] && s[p] == s[(p + 2) % L]) {
        Code t;
        for (std::size_t i = 0; i < L; ++i)
          if (i != p && i != (p + 1) % L && i != (p + 2) % L) t.push_back(s[i]);
        push(t);
      }
    }
    for_each_rewrite(s, m, push);
  }
  return false;
}

bool irreducible_certificate(const BraidWord& w) {
  auto v = std::abs(eval_unit_circle(jones(w), Angle{1, 3}));
  return std::abs(v - std::pow(std::sqrt(3.0), w.strands() - 1)) <= 1e-6;
}

bool minimality_certificate(const BraidWord& w) {
  if (colouring_certificate(w) && irreducible_certificate(w)) return true;
  return mwf_bound(homfly(w)) >= w.strands();
}

bool colouring_certificate(const BraidWord& w) {
  const int n = w.strands();
  ColourMatrix m = identity_colour(n);
  for (const auto& l : w.letters()) {
    // the inverse crossing has order dividing 3 times the same action, so
    // s^{-1} = s^2 on colourings mod 3
    const int reps = l.sign > 0 ? 1 : 2;
    for (int r = 0; r < reps; ++r) apply_colour(m, n, l.index);
  }
  return m == identity_colour(n);
}

int thdn_length(int n) {
  // 9n/2 - 3/2 ((n+1) mod 4 + 1), kept in halves
  return (9 * n - 3 * (((n + 1) % 4) + 1)) / 2;
}

BraidWord thdn_family(int n) {
  if (n < 4) throw std::invalid_argument("thdn_family needs n >= 4");
  const bool cube_odd = (n % 4 == 0 || n % 4 == 1);
  std::vector<int> block;
  for (int i = 1; i <= n - 1; ++i) {
    const bool cubed = (i % 2 == 1) == cube_odd;
    for (int r = 0; r < (cubed ? 3 : 1); ++r) block.push_back(i);
  }
  std::vector<int> word = block;
  word.insert(word.end(), block.begin(), block.end());
  switch (n % 4) {
    case 0:
      for (int i = 2; i <= n - 2; i += 2) word.push_back(i);
      break;
    case 1:
      for (int i = 2; i <= n - 1; i += 2) word.push_back(i);
      break;
    case 2:
      for (int i = 1; i <= n - 1; i += 2) word.push_back(i);
      break;
    default:
      for (int r = 0; r < 4; ++r) word.push_back(1);
      for (int i = 3; i <= n - 2; i += 2) word.push_back(i);
      break;
  }
  return BraidWord::positive(n, word);
}

BraidWord beta_family(int n) {
  if (n < 5 || n % 2 == 0) throw std::invalid_argument("beta_family needs odd n >= 5");
  std::vector<int> half;
  for (int i = 1; i <= n - 2; i += 2)
    for (int r = 0; r < (i == n - 2 ? 3 : 1); ++r) half.push_back(i);
  for (int i = 2; i <= n - 1; i += 2)
    for (int r = 0; r < (i == 2 ? 3 : 1); ++r) half.push_back(i);
  std::vector<int> word = half;
  word.insert(word.end(), half.begin(), half.end());
  return BraidWord::positive(n, word);
}

namespace {

struct DnSearch {
  int n;
  int c;
  std::optional<Code> found;
  Code word;
  std::vector<int> counts;
  std::vector<ColourMatrix> colour;  // colour[d]: action of the first d letters
  std::vector<Permutation> perm;

  bool accept(const Code& s) {
    if (min_rotation(s) != s) return false;
    BraidWord w = from_code(s, n);
    if (composite_or_disconnected_filter(w) != ClosureVerdict::Knot) return false;
    return minimality_certificate(w);
  }

  bool dfs(std::size_t depth) {
    const int g = n - 1;
    int missing = 0;
    for (int i = 1; i <= g; ++i) missing += std::max(0, 2 - counts[static_cast<std::size_t>(i)]);
    if (missing > c - static_cast<int>(depth)) return false;
    if (static_cast<int>(depth) == c) {
      if (perm[depth].cycle_count() != 1) return false;
      if (!accept(word)) return false;
      found = word;
      return true;
    }
    for (int i = 1; i <= g; ++i) {
      place(depth, i);
      bool ok = dfs(depth + 1);
      --counts[static_cast<std::size_t>(i)];
      if (ok) return true;
    }
    return false;
  }

  void place(std::size_t d, int i) {
    word[d] = static_cast<char>(i);
    ++counts[static_cast<std::size_t>(i)];
    colour[d + 1] = colour[d];
    apply_colour(colour[d + 1], n, i);
    perm[d + 1] = perm[d];
    perm[d + 1].swap_adjacent(i - 1);
  }

  /// Words starting with 1, `second`; needs c >= 2.
  std::optional<Code> run(int second) {
    word.assign(static_cast<std::size_t>(c), 1);
    counts.assign(static_cast<std::size_t>(n), 0);
    colour.assign(static_cast<std::size_t>(c + 1), identity_colour(n));
    perm.assign(static_cast<std::size_t>(c + 1), Permutation(n));
    place(0, 1);
    place(1, second);
    dfs(2);
    return found;
  }
};

}  // namespace

DnResult d_n_pipeline(int n, int c_max, int jobs) {
  if (n < 2) throw std::invalid_argument("d_n needs n >= 2");
  DnResult res;
  res.n = n;
  for (int c = 1; c <= c_max; ++c) {
    res.searched_up_to = c;
    if ((c - (n - 1)) % 2 != 0) continue;  // a knot needs c = n - 1 mod 2
    if (c < 2 * (n - 1)) continue;         // every generator at least twice
    std::vector<std::optional<Code>> hits(static_cast<std::size_t>(n));
    std::mutex mu;
    int next = 1;
    auto worker = [&] {
      for (;;) {
        int second;
        {
          std::lock_guard lock(mu);
          if (next > n - 1) return;
          second = next++;
        }
        DnSearch s{n, c, {}, {}, {}, {}, {}};
        hits[static_cast<std::size_t>(second)] = s.run(second);
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < std::max(1, jobs); ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (const auto& h : hits) {
      if (!h) continue;
      res.d = c;
      res.witness = from_code(*h, n);
      return res;
    }
  }
  res.note = "inconclusive up to " + std::to_string(c_max) + " crossings";
  return res;
}

std::vector<BraidWord> exhaust_length9(const Exhaust9Options& opt, Exhaust9Stats* stats) {
  Exhaust9Stats st;
  const int n = 4;
  const CanonicalPolicy policy = CanonicalPolicy::max_digit_sum();
  const Moves m = moves_of(policy);
  std::vector<BraidWord> out;
  for_each_word(3, 9, 0, [&](const Code& s) {
    ++st.generated;
    // maximal digit sum over the YB class, lexicographically minimal rotation
    if (min_rotation(s) != s) return;
    const long sum = code_sum(s);
    bool maximal = true;
    explore(s, n, m, policy.class_limit, [&](const Code& t) {
      if (code_sum(t) > sum) maximal = false;
      return !maximal;
    });
    if (!maximal) return;
    ++st.canonical;
    if (opt.letter_count_filter && (count_of(s, 1) < 2 || count_of(s, 2) < 4 || count_of(s, 3) < 2)) return;
    ++st.after_counts;
    if (opt.composite_filter) {
      // an isolated 1 or 2 in any YB/cyclic conjugate makes the braid
      // destabilisable or composite; 3 may be linked to letters outside
      bool isolated = false;
      explore(s, n, m, policy.class_limit, [&](const Code& t) {
        isolated = count_of(t, 1) == 1 || count_of(t, 2) == 1;
        return isolated;
      });
      if (isolated) return;
    }
    ++st.after_composite;
    BraidWord w = from_code(s, n);
    if (opt.connectedness_test && square_elimination_disconnects(w, {1, 2})) return;
    ++st.survivors;
    out.push_back(w);
  });
  if (stats) *stats = st;
  return out;
}

std::pair<BraidWord, BraidWord> subword_split(const BraidWord& w) {
  if (!w.is_positive()) throw std::invalid_argument("subword_split needs a positive word");
  if (w.strands() > 6) throw std::invalid_argument("subword_split needs at most 6 strands");
  std::vector<int> a, b;
  for (const auto& l : w.letters()) {
    if (l.index <= 3) a.push_back(l.index);
    if (l.index >= 3) b.push_back(l.index);
  }
  return {BraidWord::positive(4, a), BraidWord::positive(6, b)};
}

BraidWord subword_compose(const BraidWord& b1, const BraidWord& b2) {
  auto segments = [](const BraidWord& w, int lo, int hi) {
    std::vector<std::vector<int>> segs(1);
    for (const auto& l : w.letters()) {
      if (l.sign != 1) throw std::invalid_argument("subword_compose needs positive words");
      if (l.index == 3) {
        segs.emplace_back();
      } else if (l.index < lo || l.index > hi) {
        throw std::invalid_argument("letter out of range for subword");
      } else {
        segs.back().push_back(l.index);
      }
    }
    return segs;
  };
  auto s1 = segments(b1, 1, 2);
  auto s2 = segments(b2, 4, 5);
  if (s1.size() != s2.size()) throw std::invalid_argument("subwords have different numbers of 3's");
  std::vector<int> out;
  for (std::size_t i = 0; i < s1.size(); ++i) {
    if (i > 0) out.push_back(3);
    out.insert(out.end(), s1[i].begin(), s1[i].end());
    out.insert(out.end(), s2[i].begin(), s2[i].end());
  }
  return BraidWord::positive(6, out);
}

std::vector<SizeProfile> subword_size_profiles(int crossings, int min_subword) {
  // [b1] = [b]_1 + [b]_2 + [b]_3 with [b]_1 >= 2, [b]_2 >= 4; same for b2
  std::vector<SizeProfile> out;
  for (int k = 2; k <= crossings; ++k) {
    const int least = std::max(min_subword, 6 + k);
    for (int a = least; a <= crossings + k - least; ++a) {
      const int b = crossings + k - a;
      if (b < least || a > b) continue;
      out.push_back({a, k, b});
    }
  }
  return out;
}

std::string format_record(const CensusRecord& r) {
  std::ostringstream out;
  out << format_word(r.word, true) << '\t' << r.crossings << '\t' << r.strands << '\t' << (r.is_knot ? 1 : 0)
      << '\t' << (r.composite ? 1 : 0) << '\t' << (r.reduction ? format_word(*r.reduction, true) : "-") << '\t'
      << (r.irreducible_certified ? 1 : 0);
  return out.str();
}

CensusRecord parse_record(const std::string& line) {
  std::vector<std::string> f;
  std::stringstream in(line);
  std::string field;
  while (std::getline(in, field, '\t')) f.push_back(field);
  if (f.size() != 7) throw std::invalid_argument("census record needs 7 tab-separated fields");
  CensusRecord r;
  r.word = parse_word(f[0]);
  r.crossings = std::stoi(f[1]);
  r.strands = std::stoi(f[2]);
  r.is_knot = f[3] == "1";
  r.composite = f[4] == "1";
  if (f[5] != "-") r.reduction = parse_word(f[5]);
  r.irreducible_certified = f[6] == "1";
  return r;
}

CensusRecord make_record(const BraidWord& w, std::size_t reduction_budget) {
  CensusRecord r;
  r.word = w;
  r.crossings = static_cast<int>(w.length());
  r.strands = w.strands();
  auto verdict = composite_or_disconnected_filter(w);
  r.is_knot = verdict != ClosureVerdict::NonKnot;
  r.composite = verdict == ClosureVerdict::Composite;
  if (verdict == ClosureVerdict::Knot) {
    r.irreducible_certified = minimality_certificate(w);
    if (!r.irreducible_certified) {
      auto red = reduction_search(w, reduction_budget);
      if (red.best_word.strands() < w.strands()) r.reduction = red.best_word;
    }
  }
  return r;
}

std::vector<CensusRecord> run_census(int n, int c, const std::string& path, const CensusOptions& opt) {
  const int g = n - 1;
  std::vector<std::vector<CensusRecord>> parts(static_cast<std::size_t>(g));
  std::mutex mu;
  int next = 1;
  std::size_t done = 0;

  auto part_path = [&](int first) { return path + ".part" + std::to_string(first); };
  auto work = [&](int first) {
    auto& out = parts[static_cast<std::size_t>(first - 1)];
    std::ifstream existing(part_path(first));
    if (existing) {
      std::string line;
      while (std::getline(existing, line))
        if (!line.empty() && line != "#done") out.push_back(parse_record(line));
      return;
    }
    for_each_word(g, c, first, [&](const Code& s) {
      if (!uses_all(s, n) || !may_be_canonical(s, opt.policy)) return;
      if (canonical_code(s, n, opt.policy) != s) return;
      out.push_back(make_record(from_code(s, n), opt.reduction_budget));
    });
    std::ofstream part(part_path(first) + ".tmp");
    for (const auto& r : out) part << format_record(r) << '\n';
    part.close();
    std::rename((part_path(first) + ".tmp").c_str(), part_path(first).c_str());
  };
  auto worker = [&] {
    for (;;) {
      int first;
      {
        std::lock_guard lock(mu);
        if (next > g) return;
        first = next++;
      }
      work(first);
      std::lock_guard lock(mu);
      ++done;
      if (opt.progress) opt.progress(done, static_cast<std::size_t>(g));
    }
  };
  if (c > 0) {
    std::vector<std::thread> pool;
    for (int j = 0; j < std::max(1, opt.jobs); ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<CensusRecord> all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end(), [](const CensusRecord& a, const CensusRecord& b) { return a.word < b.word; });
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& r : all) out << format_record(r) << '\n';
  out.close();
  for (int first = 1; first <= g; ++first) std::remove(part_path(first).c_str());
  return all;
}

}  // namespace braidkit
