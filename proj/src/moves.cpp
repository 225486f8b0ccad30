#include "braidkit/moves.hpp"

#include <algorithm>
#include <cstdlib>

namespace braidkit {

namespace {

void push_unique(std::vector<BraidWord>& out, const BraidWord& w, const BraidWord& self) {
  if (!(w == self)) out.push_back(w);
}

void yb_moves(const BraidWord& w, bool forward, std::vector<BraidWord>& out) {
  const auto& ls = w.letters();
  for (std::size_t p = 0; p + 2 < ls.size(); ++p) {
    const Letter &a = ls[p], &b = ls[p + 1], &c = ls[p + 2];
    if (a.sign != b.sign || b.sign != c.sign || a.index != c.index) continue;
    int delta = forward ? 1 : -1;
    if (b.index != a.index + delta) continue;
    std::vector<Letter> next = ls;
    next[p] = b;
    next[p + 1] = a;
    next[p + 2] = b;
    out.emplace_back(w.strands(), std::move(next));
  }
}

}  // namespace

BraidWord rotate(const BraidWord& w, std::size_t shift) {
  if (w.empty()) return w;
  std::vector<Letter> ls = w.letters();
  std::rotate(ls.begin(), ls.begin() + static_cast<long>(shift % ls.size()), ls.end());
  return BraidWord(w.strands(), std::move(ls));
}

BraidWord flip(const BraidWord& w) {
  std::vector<Letter> ls = w.letters();
  for (auto& l : ls) l.index = w.strands() - l.index;
  return BraidWord(w.strands(), std::move(ls));
}

BraidWord stabilize(const BraidWord& w, int sign) {
  std::vector<Letter> ls = w.letters();
  ls.push_back({w.strands(), sign > 0 ? 1 : -1});
  return BraidWord(w.strands() + 1, std::move(ls));
}

std::optional<BraidWord> destabilize(const BraidWord& w) {
  const int n = w.strands();
  if (n < 2) return std::nullopt;
  const auto& ls = w.letters();
  std::size_t at = ls.size();
  int hits = 0;
  for (std::size_t p = 0; p < ls.size(); ++p) {
    if (ls[p].index == n - 1) {
      ++hits;
      at = p;
    }
  }
  if (hits != 1) return std::nullopt;
  // rotate so the top letter is last, then drop it
  std::vector<Letter> out;
  out.reserve(ls.size() - 1);
  for (std::size_t k = 1; k < ls.size(); ++k) out.push_back(ls[(at + k) % ls.size()]);
  return BraidWord(n - 1, std::move(out));
}

std::optional<BraidWord> destabilize_bottom(const BraidWord& w) {
  auto d = destabilize(flip(w));
  if (!d) return std::nullopt;
  return flip(*d);
}

std::vector<BraidWord> neighbors(const BraidWord& w, const MoveSet& kinds) {
  std::vector<BraidWord> out;
  const auto& ls = w.letters();
  const int n = w.strands();

  if (kinds.count(MoveKind::YBForward)) yb_moves(w, true, out);
  if (kinds.count(MoveKind::YBBackward)) yb_moves(w, false, out);
  if (kinds.count(MoveKind::Commute)) {
    for (std::size_t p = 0; p + 1 < ls.size(); ++p) {
      if (std::abs(ls[p].index - ls[p + 1].index) > 1) {
        std::vector<Letter> next = ls;
        std::swap(next[p], next[p + 1]);
        out.emplace_back(n, std::move(next));
      }
    }
  }
  if (kinds.count(MoveKind::CyclicShift) && ls.size() > 1) {
    push_unique(out, rotate(w, 1), w);
    push_unique(out, rotate(w, ls.size() - 1), w);
  }
  if (kinds.count(MoveKind::Flip)) push_unique(out, flip(w), w);
  if (kinds.count(MoveKind::FreeCancel)) {
    for (std::size_t p = 0; p + 1 < ls.size(); ++p) {
      if (ls[p].index == ls[p + 1].index && ls[p].sign == -ls[p + 1].sign) {
        std::vector<Letter> next;
        next.reserve(ls.size() - 2);
        next.insert(next.end(), ls.begin(), ls.begin() + static_cast<long>(p));
        next.insert(next.end(), ls.begin() + static_cast<long>(p) + 2, ls.end());
        out.emplace_back(n, std::move(next));
      }
    }
  }
  if (kinds.count(MoveKind::Stabilize)) {
    out.push_back(stabilize(w, 1));
    out.push_back(stabilize(w, -1));
  }
  if (kinds.count(MoveKind::Destabilize)) {
    if (auto d = destabilize(w)) out.push_back(*d);
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(std::remove(out.begin(), out.end(), w), out.end());
  return out;
}

}  // namespace braidkit
