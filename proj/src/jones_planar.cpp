#include "braidkit/jones_planar.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace braidkit {

namespace {

// A planar diagram on n strands: partner[p] for points 0..n-1 (top) and
// n..2n-1 (bottom).
using Diagram = std::vector<std::int8_t>;
// Polynomials here are in A, stored in LaurentPoly1's exponent slot.
using Element = std::map<Diagram, LaurentPoly1>;

Diagram identity_diagram(int n) {
  Diagram d(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    d[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(n + i);
    d[static_cast<std::size_t>(n + i)] = static_cast<std::int8_t>(i);
  }
  return d;
}

/// Stacks e_g (0-based, joining strands g and g+1) below `top`. Returns the
/// new diagram and the number of closed loops created.
std::pair<Diagram, int> append_cup_cap(const Diagram& top, int n, int g) {
  // Bottom points g and g+1 of `top` are capped off; the new bottom points
  // g and g+1 are joined by a cup.
  Diagram out = top;
  const int bg = n + g, bh = n + g + 1;
  int loops = 0;
  int a = top[static_cast<std::size_t>(bg)];
  int b = top[static_cast<std::size_t>(bh)];
  if (a == bh) {
    ++loops;  // the cap closes an arc into a loop
  } else {
    out[static_cast<std::size_t>(a)] = static_cast<std::int8_t>(b);
    out[static_cast<std::size_t>(b)] = static_cast<std::int8_t>(a);
  }
  out[static_cast<std::size_t>(bg)] = static_cast<std::int8_t>(bh);
  out[static_cast<std::size_t>(bh)] = static_cast<std::int8_t>(bg);
  return {out, loops};
}

int closure_loops(const Diagram& d, int n) {
  // join top i to bottom i and count cycles
  std::vector<char> seen(d.size(), 0);
  int loops = 0;
  for (std::size_t start = 0; start < d.size(); ++start) {
    if (seen[start]) continue;
    ++loops;
    int p = static_cast<int>(start);
    while (!seen[static_cast<std::size_t>(p)]) {
      seen[static_cast<std::size_t>(p)] = 1;
      int q = d[static_cast<std::size_t>(p)];
      seen[static_cast<std::size_t>(q)] = 1;
      p = q < n ? q + n : q - n;
    }
  }
  return loops;
}

void accumulate(Element& e, const Diagram& d, const LaurentPoly1& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

}  // namespace

std::size_t planar_basis_dimension(int n) {
  std::size_t c = 1;
  for (int k = 0; k < n; ++k) c = c * static_cast<std::size_t>(2 * (2 * k + 1)) / static_cast<std::size_t>(k + 2);
  return c;
}

LaurentPoly1 jones_planar(const BraidWord& w) {
  const int n = w.strands();
  if (n > 12) throw std::invalid_argument("planar Jones path limited to 12 strands");
  const LaurentPoly1 loop = -(s_pow(2) + s_pow(-2));

  Element state;
  state.emplace(identity_diagram(n), LaurentPoly1::constant(1));
  for (const auto& l : w.letters()) {
    const int g = l.index - 1;
    // positive crossing: A * id + A^{-1} * e ; negative: A^{-1} * id + A * e
    const int id_exp = l.sign > 0 ? 1 : -1;
    Element next;
    for (const auto& [d, c] : state) {
      accumulate(next, d, c.times_monomial(id_exp));
      auto [d2, loops] = append_cup_cap(d, n, g);
      LaurentPoly1 c2 = c.times_monomial(-id_exp);
      if (loops) c2 = c2 * loop;
      accumulate(next, d2, c2);
    }
    state = std::move(next);
  }

  LaurentPoly1 bracket;
  for (const auto& [d, c] : state) {
    bracket += c * loop.pow(static_cast<unsigned>(closure_loops(d, n) - 1));
  }
  // V = (-A^3)^{-writhe} <D>, with A = t^{-1/4} = s^{-1/2}
  const int writhe = exponent_sum(w);
  LaurentPoly1 normalised = bracket.times_monomial(-3 * writhe, (writhe % 2 == 0) ? 1 : -1);
  std::vector<LaurentPoly1::Term> out;
  for (const auto& [e, c] : normalised.terms()) {
    if (e % 2 != 0) throw std::logic_error("odd A-exponent in normalised bracket");
    out.push_back({-e / 2, c});
  }
  return LaurentPoly1::from_terms(std::move(out));
}

}  // namespace braidkit
