#pragma once

#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "knotmod/common.hpp"
#include "knotmod/diagram.hpp"

namespace knotmod::braid {

/// A braid word on `strands` strands; letter +i / -i is the generator
/// crossing wires i and i+1 (1-based), positive when the NW-SE strand
/// passes over.
struct BraidWord {
  int strands;
  std::vector<int> letters;
};

enum class Closure {
  trace,  // bottom of each wire loops back to its own top
  plat,   // wires capped in adjacent pairs (1,2), (3,4), ... top and bottom
};

namespace detail {

// Crossing ports numbered counterclockwise: 0=NE, 1=NW, 2=SW, 3=SE.
// A downward strand through letter k enters at NE/NW and leaves at SW/SE;
// plat closures also route strands upward through the same ports.
inline int opposite_port(int p) { return (p + 2) % 4; }

}  // namespace detail

/// Assembles the PD diagram of a closed braid or plat. The knot is walked
/// once to assign arc labels, so the result always passes diagram
/// validation; a closure with more than one component is rejected.
inline Diagram close_word(const BraidWord& w, Closure style) {
  const int n = w.strands;
  const std::size_t L = w.letters.size();
  if (n < 2) throw InputError("braid needs at least two strands");
  if (L == 0) throw InputError("empty braid word");
  if (style == Closure::plat && n % 2 != 0)
    throw InputError("plat closure needs an even strand count");
  for (int g : w.letters)
    if (g == 0 || std::abs(g) > n - 1)
      throw InputError("braid letter out of range");

  // Node ids: 4k+p for port p of crossing k, then virtual wire ends.
  const int top0 = static_cast<int>(4 * L);
  const int bot0 = top0 + n;
  const int n_nodes = bot0 + n;

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_nodes));
  auto connect = [&adj](int u, int v) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  };

  for (int j = 1; j <= n; ++j) {
    int hang = top0 + (j - 1);  // dangling lower end of the wire so far
    for (std::size_t k = 0; k < L; ++k) {
      const int i = std::abs(w.letters[k]);
      if (i != j && i + 1 != j) continue;
      const bool left = (i == j);
      connect(hang, static_cast<int>(4 * k) + (left ? 1 : 0));  // NW or NE
      hang = static_cast<int>(4 * k) + (left ? 2 : 3);          // SW or SE
    }
    connect(hang, bot0 + (j - 1));
  }
  if (style == Closure::trace) {
    for (int j = 0; j < n; ++j) connect(bot0 + j, top0 + j);
  } else {
    for (int j = 0; j < n; j += 2) {
      connect(top0 + j, top0 + j + 1);
      connect(bot0 + j, bot0 + j + 1);
    }
  }

  // Contract the degree-2 virtual nodes into port-to-port arcs.
  std::vector<int> port_peer(4 * L, -1);
  std::vector<char> used(static_cast<std::size_t>(n_nodes), 0);
  for (int p = 0; p < static_cast<int>(4 * L); ++p) {
    if (port_peer[static_cast<std::size_t>(p)] != -1) continue;
    int prev = p;
    int cur = adj[static_cast<std::size_t>(p)][0];
    while (cur >= top0) {
      used[static_cast<std::size_t>(cur)] = 1;
      const auto& nb = adj[static_cast<std::size_t>(cur)];
      const int next = (nb[0] == prev) ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    port_peer[static_cast<std::size_t>(p)] = cur;
    port_peer[static_cast<std::size_t>(cur)] = p;
  }
  for (int v = top0; v < n_nodes; ++v)
    if (!used[static_cast<std::size_t>(v)])
      throw InputError("closure has a crossing-free component");

  // Walk the knot, labeling arcs 1..2L in traversal order.
  std::vector<int> label_at(4 * L, 0);
  std::vector<char> entered(4 * L, 0);
  const int start_port = 0;
  int enter = port_peer[start_port];  // arc 1 runs start_port -> enter
  label_at[static_cast<std::size_t>(start_port)] = 1;
  for (std::size_t arc = 1; arc <= 2 * L; ++arc) {
    if (label_at[static_cast<std::size_t>(enter)] != 0)
      throw InputError("braid closure is a link, not a knot");
    label_at[static_cast<std::size_t>(enter)] = static_cast<int>(arc);
    entered[static_cast<std::size_t>(enter)] = 1;
    const int exit = (enter & ~3) | detail::opposite_port(enter & 3);
    const int next_label = (arc == 2 * L) ? 1 : static_cast<int>(arc) + 1;
    if (label_at[static_cast<std::size_t>(exit)] != 0 && next_label != 1)
      throw InputError("braid closure is a link, not a knot");
    label_at[static_cast<std::size_t>(exit)] = next_label;
    enter = port_peer[static_cast<std::size_t>(exit)];
  }
  for (int p = 0; p < static_cast<int>(4 * L); ++p)
    if (label_at[static_cast<std::size_t>(p)] == 0)
      throw InputError("braid closure is a link, not a knot");

  std::vector<Crossing> cs;
  cs.reserve(L);
  for (std::size_t k = 0; k < L; ++k) {
    // Positive letters carry the over-strand on the NW-SE diagonal, so the
    // under-strand enters at NE (0) or SW (2); negative letters swap roles.
    const bool positive = w.letters[k] > 0;
    const int d0 = positive ? 0 : 1;
    const int base = static_cast<int>(4 * k);
    const int pe = entered[static_cast<std::size_t>(base + d0)] ? d0 : d0 + 2;
    Crossing c{};
    c.a = label_at[static_cast<std::size_t>(base + pe)];
    c.b = label_at[static_cast<std::size_t>(base + (pe + 1) % 4)];
    c.c = label_at[static_cast<std::size_t>(base + (pe + 2) % 4)];
    c.d = label_at[static_cast<std::size_t>(base + (pe + 3) % 4)];
    cs.push_back(c);
  }
  return Diagram::from_crossings(std::move(cs));
}

/// Trace closure of a braid word.
inline Diagram braid_closure(const BraidWord& w) {
  return close_word(w, Closure::trace);
}

/// Plat closure of a braid word on an even strand count.
inline Diagram plat_closure(const BraidWord& w) {
  return close_word(w, Closure::plat);
}

/// Odd-length all-positive continued fraction of p/q (0 < q < p), the twist
/// counts of the standard alternating two-bridge form.
inline std::vector<long> positive_continued_fraction(long p, long q) {
  if (p <= 0 || q <= 0 || q >= p || std::gcd(p, q) != 1)
    throw InputError("two-bridge fraction needs 0 < q < p coprime");
  std::vector<long> cf;
  long a = p, b = q;
  while (b > 0) {
    cf.push_back(a / b);
    const long r = a % b;
    a = b;
    b = r;
  }
  if (cf.size() % 2 == 0) {
    if (cf.back() == 1) {
      cf.pop_back();
      cf.back() += 1;
    } else {
      cf.back() -= 1;
      cf.push_back(1);
    }
  }
  return cf;
}

/// Standard alternating diagram of the two-bridge knot or link b(p,q) as a
/// four-strand plat: twist blocks alternate between the middle pair and a
/// bottom pair, following the continued fraction of p/q.
inline Diagram two_bridge(long p, long q) {
  const std::vector<long> cf = positive_continued_fraction(p, q);
  BraidWord w{4, {}};
  for (std::size_t i = 0; i < cf.size(); ++i) {
    const int g = (i % 2 == 0) ? 2 : -1;
    for (long r = 0; r < cf[i]; ++r) w.letters.push_back(g);
  }
  return plat_closure(w);
}

/// Torus knot T(p,q) as the closure of (s1 s2 ... s_{p-1})^q.
inline Diagram torus_knot(int p, int q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1)
    throw InputError("torus parameters need p,q >= 2 coprime");
  BraidWord w{p, {}};
  for (int rep = 0; rep < q; ++rep)
    for (int i = 1; i < p; ++i) w.letters.push_back(i);
  return braid_closure(w);
}

}  // namespace knotmod::braid
