#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "knotmod/common.hpp"

namespace knotmod::tl {

// Link-pattern calculus for braid closures, evaluated numerically mod a
// prime. Basis elements are non-crossing perfect matchings of 2n boundary
// points: circle indices 0..n-1 run along the top row left to right and
// n..2n-1 along the bottom row right to left, so planarity is exactly
// non-crossing on the circle.

using Matching = std::vector<int>;

inline void enumerate_matchings(Matching& cur, std::vector<Matching>& out) {
  int first = -1;
  const int m = static_cast<int>(cur.size());
  for (int i = 0; i < m; ++i)
    if (cur[static_cast<std::size_t>(i)] < 0) {
      first = i;
      break;
    }
  if (first < 0) {
    out.push_back(cur);
    return;
  }
  for (int j = first + 1; j < m; j += 2) {
    if (cur[static_cast<std::size_t>(j)] >= 0) continue;
    // Points strictly between first and j must pair among themselves, which
    // needs an even count; the stride-2 step guarantees that. They must all
    // still be free for the split to be valid.
    bool free_between = true;
    for (int k = first + 1; k < j && free_between; ++k)
      free_between = cur[static_cast<std::size_t>(k)] < 0;
    if (!free_between) continue;
    cur[static_cast<std::size_t>(first)] = j;
    cur[static_cast<std::size_t>(j)] = first;
    enumerate_matchings(cur, out);
    cur[static_cast<std::size_t>(first)] = -1;
    cur[static_cast<std::size_t>(j)] = -1;
  }
}

struct Algebra {
  int strands;
  std::vector<Matching> basis;
  std::map<Matching, int> index;
  // cap[i][b]: basis index after joining bottom strands i,i+1 of b;
  // cap_closes[i][b]: that join sealed a loop (worth one delta factor).
  std::vector<std::vector<int>> cap;
  std::vector<std::vector<char>> cap_closes;
  std::vector<int> closure_loops;  // loops after tying top j to bottom j
  std::vector<int> plat_loops;     // loops after cupping/capping adjacent pairs
  int identity_index;

  explicit Algebra(int n) : strands(n) {
    Matching cur(static_cast<std::size_t>(2 * n), -1);
    enumerate_matchings(cur, basis);
    for (int b = 0; b < static_cast<int>(basis.size()); ++b)
      index[basis[static_cast<std::size_t>(b)]] = b;

    Matching ident(static_cast<std::size_t>(2 * n));
    for (int c = 0; c < n; ++c) {
      ident[static_cast<std::size_t>(c)] = 2 * n - 1 - c;
      ident[static_cast<std::size_t>(2 * n - 1 - c)] = c;
    }
    identity_index = index.at(ident);

    cap.assign(static_cast<std::size_t>(n), {});
    cap_closes.assign(static_cast<std::size_t>(n), {});
    for (int i = 1; i < n; ++i) {
      auto& tgt = cap[static_cast<std::size_t>(i)];
      auto& cls = cap_closes[static_cast<std::size_t>(i)];
      for (const Matching& m : basis) {
        const int u = 2 * n - i;      // bottom strand i
        const int v = 2 * n - 1 - i;  // bottom strand i+1
        Matching nm = m;
        const int x = m[static_cast<std::size_t>(u)];
        const int y = m[static_cast<std::size_t>(v)];
        if (x == v) {
          tgt.push_back(index.at(m));
          cls.push_back(1);
        } else {
          nm[static_cast<std::size_t>(x)] = y;
          nm[static_cast<std::size_t>(y)] = x;
          nm[static_cast<std::size_t>(u)] = v;
          nm[static_cast<std::size_t>(v)] = u;
          tgt.push_back(index.at(nm));
          cls.push_back(0);
        }
      }
    }

    for (const Matching& m : basis) {
      std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
      int loops = 0;
      for (int s = 0; s < 2 * n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++loops;
        int cur_pt = s;
        while (!seen[static_cast<std::size_t>(cur_pt)]) {
          seen[static_cast<std::size_t>(cur_pt)] = 1;
          const int via = m[static_cast<std::size_t>(cur_pt)];
          seen[static_cast<std::size_t>(via)] = 1;
          // Trace closure arc: top c joins bottom c.
          cur_pt = 2 * n - 1 - via;
        }
      }
      closure_loops.push_back(loops);
    }

    // Plat gluing: cups pair adjacent top columns, caps pair adjacent bottom
    // columns. In circle indices both pairings become x <-> x^1.
    for (const Matching& m : basis) {
      std::vector<char> seen(static_cast<std::size_t>(2 * n), 0);
      int loops = 0;
      for (int s = 0; s < 2 * n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++loops;
        int cur_pt = s;
        while (!seen[static_cast<std::size_t>(cur_pt)]) {
          seen[static_cast<std::size_t>(cur_pt)] = 1;
          const int via = m[static_cast<std::size_t>(cur_pt)];
          seen[static_cast<std::size_t>(via)] = 1;
          cur_pt = via ^ 1;
        }
      }
      plat_loops.push_back(loops);
    }
  }
};

// State vector over the basis, mod a prime below 2^31.
struct Evaluator {
  const Algebra& alg;
  std::uint64_t p;
  std::uint64_t tau, tau_inv, delta;
  std::vector<std::uint64_t> delta_pow;        // delta^k
  std::vector<std::uint64_t> closure_weight;   // delta^(loops-1) per basis
  std::vector<std::uint64_t> plat_weight;      // same, for plat gluing

  static std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e,
                               std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }

  Evaluator(const Algebra& a, std::uint64_t prime, std::uint64_t tau0)
      : alg(a), p(prime), tau(tau0 % prime) {
    tau_inv = pow_mod(tau, p - 2, p);
    const std::uint64_t t2 = tau * tau % p;
    const std::uint64_t t2i = tau_inv * tau_inv % p;
    delta = (2 * p - t2 - t2i) % p;
    delta_pow.resize(alg.basis.size() + static_cast<std::size_t>(alg.strands) + 2);
    delta_pow[0] = 1;
    for (std::size_t k = 1; k < delta_pow.size(); ++k)
      delta_pow[k] = delta_pow[k - 1] * delta % p;
    for (int b = 0; b < static_cast<int>(alg.basis.size()); ++b) {
      closure_weight.push_back(
          delta_pow[static_cast<std::size_t>(
              alg.closure_loops[static_cast<std::size_t>(b)] - 1)]);
      plat_weight.push_back(
          delta_pow[static_cast<std::size_t>(
              alg.plat_loops[static_cast<std::size_t>(b)] - 1)]);
    }
  }

  std::vector<std::uint64_t> identity_vector() const {
    std::vector<std::uint64_t> v(alg.basis.size(), 0);
    v[static_cast<std::size_t>(alg.identity_index)] = 1;
    return v;
  }

  // v <- image of v under one braid letter (sign carried by `letter`).
  void apply_letter(std::vector<std::uint64_t>& v, int letter,
                    std::vector<std::uint64_t>& scratch) const {
    const int i = letter > 0 ? letter : -letter;
    const std::uint64_t a = letter > 0 ? tau : tau_inv;
    const std::uint64_t b = letter > 0 ? tau_inv : tau;
    const auto& tgt = alg.cap[static_cast<std::size_t>(i)];
    const auto& cls = alg.cap_closes[static_cast<std::size_t>(i)];
    scratch.assign(v.size(), 0);
    for (std::size_t s = 0; s < v.size(); ++s) {
      if (v[s] == 0) continue;
      const std::uint64_t w =
          cls[s] ? v[s] * delta % p : v[s];
      const std::size_t d = static_cast<std::size_t>(tgt[s]);
      scratch[d] = (scratch[d] + b * w) % p;
      scratch[s] = (scratch[s] + a * v[s]) % p;
    }
    v.swap(scratch);
  }

  // Bracket value of the trace closure for the accumulated state.
  std::uint64_t closure_value(const std::vector<std::uint64_t>& v) const {
    std::uint64_t acc = 0;
    for (std::size_t s = 0; s < v.size(); ++s)
      if (v[s]) acc = (acc + v[s] * closure_weight[s]) % p;
    return acc;
  }

  // Bracket value of the plat closure (adjacent cups above, caps below).
  std::uint64_t plat_value(const std::vector<std::uint64_t>& v) const {
    std::uint64_t acc = 0;
    for (std::size_t s = 0; s < v.size(); ++s)
      if (v[s]) acc = (acc + v[s] * plat_weight[s]) % p;
    return acc;
  }
};

}  // namespace knotmod::tl
