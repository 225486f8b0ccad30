#include "braidkit/homfly.hpp"

#include <array>
#include <cstdlib>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace braidkit {

namespace {

using Perm = std::vector<std::int8_t>;

std::size_t factorial(int m) {
  std::size_t f = 1;
  for (int i = 2; i <= m; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

std::size_t perm_rank(const Perm& p) {
  const int m = static_cast<int>(p.size());
  std::size_t r = 0;
  for (int i = 0; i < m; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < m; ++j)
      if (p[j] < p[i]) ++smaller;
    r = r * static_cast<std::size_t>(m - i) + static_cast<std::size_t>(smaller);
  }
  return r;
}

Perm perm_unrank(std::size_t r, int m) {
  std::vector<int> digits(static_cast<std::size_t>(m));
  for (int i = m - 1; i >= 0; --i) {
    std::size_t base = static_cast<std::size_t>(m - i);
    digits[static_cast<std::size_t>(i)] = static_cast<int>(r % base);
    r /= base;
  }
  std::vector<int> pool(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) pool[static_cast<std::size_t>(i)] = i;
  Perm p(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    auto d = static_cast<std::size_t>(digits[static_cast<std::size_t>(i)]);
    p[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(pool[d]);
    pool.erase(pool.begin() + static_cast<long>(d));
  }
  return p;
}

const LaurentPoly2& poly_vz() {
  static const LaurentPoly2 p = vz(1, 1);
  return p;
}

std::size_t approx_bytes(const LaurentPoly2& p) {
  return sizeof(LaurentPoly2) + p.size() * sizeof(LaurentPoly2::Term) + 16;
}

/// Sparse Hecke element over a fixed strand count, keyed by permutation.
using SparseElement = std::map<Perm, LaurentPoly2>;

void add_to(SparseElement& e, const Perm& p, const LaurentPoly2& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

/// s_g * element, generator g swaps values g and g+1 (0-based).
SparseElement left_multiply(const SparseElement& e, int g) {
  SparseElement out;
  for (const auto& [u, c] : e) {
    int pos_g = -1, pos_h = -1;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == g) pos_g = static_cast<int>(i);
      if (u[i] == g + 1) pos_h = static_cast<int>(i);
    }
    Perm su = u;
    std::swap(su[static_cast<std::size_t>(pos_g)], su[static_cast<std::size_t>(pos_h)]);
    if (pos_g < pos_h) {
      add_to(out, su, c);
    } else {
      add_to(out, u, c * poly_vz());
      add_to(out, su, c.times_monomial({2, 0}));
    }
  }
  return out;
}

/// Right-multiplication tables for S_m on the dense basis.
struct GroupTables {
  int m = 0;
  std::size_t order = 0;
  std::vector<std::uint32_t> swap_rank;  // order * (m-1)
  std::vector<std::uint8_t> ascending;   // perm(g) < perm(g+1)
};

}  // namespace

struct HomflyEngine::Impl {
  EngineBudget budget;
  mutable std::shared_mutex mutex;
  // memo[m][rank] -> trace of the permutation braid
  mutable std::vector<std::vector<LaurentPoly2>> memo;
  mutable std::vector<std::vector<std::uint8_t>> known;
  mutable std::size_t entries = 0;
  mutable std::size_t bytes = 0;
  mutable std::map<int, std::shared_ptr<const GroupTables>> tables;
  LaurentPoly2 delta;

  explicit Impl(EngineBudget b) : budget(b), delta(vz(-1, -1) - vz(1, -1)) {}

  std::shared_ptr<const GroupTables> group(int m) const {
    {
      std::shared_lock lock(mutex);
      auto it = tables.find(m);
      if (it != tables.end()) return it->second;
    }
    auto t = std::make_shared<GroupTables>();
    t->m = m;
    t->order = factorial(m);
    const std::size_t gens = static_cast<std::size_t>(m > 1 ? m - 1 : 0);
    t->swap_rank.resize(t->order * gens);
    t->ascending.resize(t->order * gens);
    for (std::size_t r = 0; r < t->order; ++r) {
      Perm p = perm_unrank(r, m);
      for (std::size_t g = 0; g < gens; ++g) {
        t->ascending[r * gens + g] = p[g] < p[g + 1];
        std::swap(p[g], p[g + 1]);
        t->swap_rank[r * gens + g] = static_cast<std::uint32_t>(perm_rank(p));
        std::swap(p[g], p[g + 1]);
      }
    }
    std::unique_lock lock(mutex);
    return tables.try_emplace(m, std::move(t)).first->second;
  }

  bool lookup(int m, std::size_t rank, LaurentPoly2& out) const {
    std::shared_lock lock(mutex);
    auto mi = static_cast<std::size_t>(m);
    if (mi >= known.size() || known[mi].empty() || !known[mi][rank]) return false;
    out = memo[mi][rank];
    return true;
  }

  void store(int m, std::size_t rank, const LaurentPoly2& value) const {
    std::unique_lock lock(mutex);
    auto mi = static_cast<std::size_t>(m);
    if (memo.size() <= mi) {
      memo.resize(mi + 1);
      known.resize(mi + 1);
    }
    if (known[mi].empty()) {
      memo[mi].resize(factorial(m));
      known[mi].assign(factorial(m), 0);
    }
    if (known[mi][rank]) return;
    std::size_t add = approx_bytes(value);
    if (bytes + add > budget.max_memo_bytes) {
      throw CapacityError("skein memo budget of " + std::to_string(budget.max_memo_bytes) +
                          " bytes exceeded");
    }
    memo[mi][rank] = value;
    known[mi][rank] = 1;
    ++entries;
    bytes += add;
  }

  /// Markov trace of the positive permutation braid of p.
  LaurentPoly2 trace(const Perm& p) const {
    const int m = static_cast<int>(p.size());
    if (m <= 1) return LaurentPoly2::constant(1);
    const std::size_t rank = perm_rank(p);
    LaurentPoly2 cached;
    if (lookup(m, rank, cached)) return cached;

    LaurentPoly2 value;
    int j = 0;
    while (p[static_cast<std::size_t>(j)] != m - 1) ++j;
    Perm reduced(p.begin(), p.end());
    reduced.erase(reduced.begin() + j);  // now a permutation of {0..m-2}
    if (j == m - 1) {
      value = delta * trace(reduced);
    } else {
      // T_p = T_{p'} s_{m-2} ... s_j, so tr(T_p) = tr_{m-1}(s_{m-3} ... s_j T_{p'})
      SparseElement e;
      e.emplace(reduced, LaurentPoly2::constant(1));
      for (int g = j; g <= m - 3; ++g) e = left_multiply(e, g);
      for (const auto& [u, c] : e) value += c * trace(u);
    }
    store(m, rank, value);
    return value;
  }

  LaurentPoly2 evaluate(const BraidWord& w) const {
    const int m = w.strands();
    if (m > budget.max_strands) {
      throw CapacityError("skein engine limited to " + std::to_string(budget.max_strands) +
                          " strands, word has " + std::to_string(m));
    }
    if (m == 1) return LaurentPoly2::constant(1);
    auto tab = group(m);
    const std::size_t gens = static_cast<std::size_t>(m - 1);
    std::vector<LaurentPoly2> coef(tab->order);
    coef[0] = LaurentPoly2::constant(1);  // rank 0 is the identity
    const LaurentPoly2 vinv_z = vz(-1, 1);

    for (const auto& l : w.letters()) {
      const auto g = static_cast<std::size_t>(l.index - 1);
      for (std::size_t r = 0; r < tab->order; ++r) {
        if (!tab->ascending[r * gens + g]) continue;
        const std::size_t up = tab->swap_rank[r * gens + g];  // r s_g, one longer
        LaurentPoly2& a = coef[r];
        LaurentPoly2& b = coef[up];
        if (a.is_zero() && b.is_zero()) continue;
        LaurentPoly2 na, nb;
        if (l.sign > 0) {
          // T_r s = T_up ; T_up s = vz T_up + v^2 T_r
          na = b.times_monomial({2, 0});
          nb = a + b * poly_vz();
        } else {
          // T_r s^-1 = v^-2 T_up - v^-1 z T_r ; T_up s^-1 = T_r
          na = b - a * vinv_z;
          nb = a.times_monomial({-2, 0});
        }
        a = std::move(na);
        b = std::move(nb);
      }
    }

    LaurentPoly2 out;
    for (std::size_t r = 0; r < tab->order; ++r) {
      if (coef[r].is_zero()) continue;
      out += coef[r] * trace(perm_unrank(r, m));
    }
    return out;
  }
};

HomflyEngine::HomflyEngine(EngineBudget budget) : impl_(std::make_unique<Impl>(budget)) {}
HomflyEngine::~HomflyEngine() = default;

LaurentPoly2 HomflyEngine::homfly(const BraidWord& w) const { return impl_->evaluate(w); }

std::size_t HomflyEngine::memo_entries() const {
  std::shared_lock lock(impl_->mutex);
  return impl_->entries;
}

std::size_t HomflyEngine::memo_bytes() const {
  std::shared_lock lock(impl_->mutex);
  return impl_->bytes;
}

HomflyEngine& HomflyEngine::shared() {
  static HomflyEngine engine([] {
    EngineBudget b;
    if (const char* env = std::getenv("BRAIDKIT_MEMO_BYTES")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v > 0) b.max_memo_bytes = static_cast<std::size_t>(v);
    }
    return b;
  }());
  return engine;
}

LaurentPoly2 homfly(const BraidWord& w) { return HomflyEngine::shared().homfly(w); }

LaurentPoly2 unlink_value(int components) {
  if (components < 1) throw std::invalid_argument("unlink needs at least one component");
  LaurentPoly2 delta = vz(-1, -1) - vz(1, -1);
  return delta.pow(static_cast<unsigned>(components - 1));
}

}  // namespace braidkit
