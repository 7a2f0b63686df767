#pragma once

#include <bit>
#include <cstdint>
#include <thread>
#include <vector>

#include "knotmod/common.hpp"
#include "knotmod/diagram.hpp"
#include "knotmod/laurent.hpp"

namespace knotmod {

struct BracketOptions {
  /// Hard cap on crossings before the 2^l state enumeration is refused.
  std::size_t max_crossings = 24;
  /// Worker threads for the state sum; 0 picks one per hardware thread.
  unsigned threads = 0;
};

/// How one full smoothing of a diagram decomposes.
struct SmoothingCount {
  std::size_t a_count;     // crossings smoothed the A way
  std::size_t loop_count;  // disjoint circles left afterwards
};

namespace detail {

// Union-find over arc endpoints with path halving; reset between states.
class LoopCounter {
 public:
  void reset(std::size_t n) {
    parent_.resize(n);
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<int>(i);
  }

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }

  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[static_cast<std::size_t>(x)] = y;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Loop count after smoothing every crossing per `mask` (bit i set = A way:
// the under-in corner joins the over-out side). Each join that merges two
// strand classes lowers the circle count below the 2l arc maximum.
inline std::size_t loops_for_mask(const std::vector<Crossing>& cs,
                                  std::uint64_t mask, LoopCounter& uf) {
  const std::size_t n = 2 * cs.size();
  uf.reset(n);
  std::size_t merges = 0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Crossing& c = cs[i];
    if (mask >> i & 1) {
      merges += uf.unite(c.a - 1, c.d - 1);
      merges += uf.unite(c.b - 1, c.c - 1);
    } else {
      merges += uf.unite(c.a - 1, c.b - 1);
      merges += uf.unite(c.c - 1, c.d - 1);
    }
  }
  return n - merges;
}

}  // namespace detail

/// Resolves every crossing according to `mask` (bit i set = crossing i gets
/// the A smoothing) and counts the remaining circles. The zero-crossing
/// unknot yields one circle.
inline SmoothingCount smooth_and_count(const Diagram& d, std::uint64_t mask) {
  const std::size_t l = d.crossing_count();
  if (l < 64 && (mask >> l) != 0)
    throw InputError("smoothing mask out of range");
  if (l == 0) return {0, 1};
  detail::LoopCounter uf;
  return {static_cast<std::size_t>(std::popcount(mask)),
          detail::loops_for_mask(d.crossings(), mask, uf)};
}

/// Kauffman bracket in the variable tau, normalized so the unknot maps to 1:
/// the sum over all 2^l smoothings of tau^(a-b) * (-tau^2-tau^-2)^(loops-1).
/// States are only tallied into a (smoothing count, loop count) table, so the
/// polynomial assembly happens once and the result is identical for any
/// thread count.
inline LaurentPoly kauffman_bracket(const Diagram& d,
                                    const BracketOptions& opts = {}) {
  const std::size_t l = d.crossing_count();
  if (l > opts.max_crossings || l >= 63)
    throw InputError("state space too large");
  if (l == 0) return LaurentPoly::one(Var::Tau);  // one bare circle

  const std::size_t loop_max = l + 1;
  const std::size_t stride = loop_max + 1;
  // counts[a * stride + s] = number of states with a A-smoothings, s loops
  std::vector<std::uint64_t> counts((l + 1) * stride, 0);

  const std::uint64_t total = std::uint64_t{1} << l;
  unsigned threads = opts.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (std::uint64_t{threads} > total) threads = static_cast<unsigned>(total);

  auto run_range = [&](std::uint64_t lo, std::uint64_t hi,
                       std::vector<std::uint64_t>& tab) {
    detail::LoopCounter uf;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      const std::size_t a = static_cast<std::size_t>(std::popcount(mask));
      const std::size_t s = detail::loops_for_mask(d.crossings(), mask, uf);
      ++tab[a * stride + s];
    }
  };

  if (threads <= 1 || total < 1024) {
    run_range(0, total, counts);
  } else {
    std::vector<std::vector<std::uint64_t>> partial(
        threads, std::vector<std::uint64_t>(counts.size(), 0));
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::uint64_t chunk = total / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = chunk * t;
      const std::uint64_t hi = (t + 1 == threads) ? total : chunk * (t + 1);
      pool.emplace_back(
          [&run_range, &partial, t, lo, hi] { run_range(lo, hi, partial[t]); });
    }
    for (auto& th : pool) th.join();
    for (const auto& tab : partial)
      for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += tab[i];
  }

  const LaurentPoly delta(Var::Tau, {{2, -1}, {-2, -1}});
  std::vector<LaurentPoly> delta_pow;
  delta_pow.reserve(loop_max);
  delta_pow.push_back(LaurentPoly::one(Var::Tau));
  for (std::size_t k = 1; k < loop_max; ++k)
    delta_pow.push_back(delta_pow.back() * delta);

  LaurentPoly bracket = LaurentPoly::zero(Var::Tau);
  for (std::size_t a = 0; a <= l; ++a) {
    LaurentPoly slice = LaurentPoly::zero(Var::Tau);
    for (std::size_t s = 1; s <= loop_max; ++s) {
      const std::uint64_t n = counts[a * stride + s];
      if (n == 0) continue;
      slice = slice + LaurentPoly::monomial(Var::Tau, 0, BigInt(n)) *
                          delta_pow[s - 1];
    }
    if (slice.is_zero()) continue;
    // tau exponent 2a - l comes from tau^a * tau^-(l-a)
    const int e = 2 * static_cast<int>(a) - static_cast<int>(l);
    bracket = bracket + LaurentPoly::monomial(Var::Tau, e, 1) * slice;
  }
  return bracket;
}

/// Jones polynomial of the knot: the bracket rescaled by (-tau^3)^(-writhe)
/// and reparametrized by tau = t^(-1/4).
inline LaurentPoly jones(const Diagram& d, const BracketOptions& opts = {}) {
  return tau_to_t(kauffman_bracket(d, opts), d.writhe());
}

}  // namespace knotmod
