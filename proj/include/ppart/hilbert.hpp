#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "ppart/errors.hpp"
#include "ppart/gamma.hpp"
#include "ppart/poset.hpp"
#include "ppart/presentation.hpp"

namespace ppart {

// Coefficients a_0..a_degree of the P-partition counting series: a_d is the
// number of weak P-partitions with value sum d.
struct HilbertTruncation {
  int degree = 0;
  std::vector<std::int64_t> coefficients;

  friend bool operator==(const HilbertTruncation&, const HilbertTruncation&) = default;
};

// Exhaustive count: walk the elements along a linear extension, bounding each
// value by its predecessors' values and the remaining degree budget.  Guarded
// by a step limit so runaway inputs fail loudly instead of hanging.
inline HilbertTruncation hilbert_brute(const Poset& p, int degree,
                                       std::int64_t max_steps = 100000000) {
  if (degree < 0) throw std::invalid_argument("hilbert_brute: negative degree");
  int n = p.size();
  std::vector<int> order;
  {
    Subset placed;
    while (placed != p.all())
      for (int x = 0; x < n; ++x)
        if (!placed.contains(x) && p.strict_down(x).subset_of(placed)) {
          order.push_back(x);
          placed |= Subset::single(x);
          break;
        }
  }
  HilbertTruncation h;
  h.degree = degree;
  h.coefficients.assign(static_cast<std::size_t>(degree) + 1, 0);
  std::vector<int> value(static_cast<std::size_t>(n), 0);
  std::int64_t steps = 0;
  auto rec = [&](auto&& self, int idx, int sum) -> void {
    if (++steps > max_steps) throw ResourceLimit("hilbert_brute: step budget exhausted");
    if (idx == n) {
      ++h.coefficients[static_cast<std::size_t>(sum)];
      return;
    }
    int x = order[static_cast<std::size_t>(idx)];
    int cap = degree - sum;
    p.strict_down(x).for_each([&](int d) {
      cap = std::min(cap, value[static_cast<std::size_t>(d)]);
    });
    for (int v = 0; v <= cap; ++v) {
      value[static_cast<std::size_t>(x)] = v;
      self(self, idx + 1, sum + v);
    }
  };
  rec(rec, 0, 0);
  return h;
}

// Closed form, valid only for complete intersections: the series is
//   prod over edges (1 - q^(|J1|+|J2|))  /  prod over ideals (1 - q^|J|),
// expanded here with exact integer coefficients up to q^degree.
inline HilbertTruncation hilbert_ci(const Poset& p, int degree) {
  if (degree < 0) throw std::invalid_argument("hilbert_ci: negative degree");
  if (!check_ci(p).is_ci)
    throw NotCompleteIntersection("hilbert_ci: ring is not a complete intersection");
  GammaGraph g = build_gamma(p);
  std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
  c[0] = 1;
  for (const Ideal& j : g.vertices) {
    int k = j.members.count();
    for (int i = k; i <= degree; ++i) c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - k)];
  }
  for (auto [i1, i2] : g.edges) {
    int d = g.vertices[static_cast<std::size_t>(i1)].members.count() +
            g.vertices[static_cast<std::size_t>(i2)].members.count();
    for (int i = degree; i >= d; --i) c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - d)];
  }
  return HilbertTruncation{degree, std::move(c)};
}

// Number of linear extensions by dynamic programming over down-closed
// subsets: a down-closed set is reached by placing any of its maximal
// elements last.
inline std::uint64_t linear_extensions_brute(const Poset& p) {
  int n = p.size();
  if (n > 20) throw ResourceLimit("linear_extensions_brute: beyond 20 elements");
  std::vector<std::uint64_t> dp(std::size_t{1} << n, 0);
  dp[0] = 1;
  std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t m = 1; m < limit; ++m) {
    Subset s{m};
    if (!detail::down_closed(p, s)) continue;
    std::uint64_t total = 0;
    s.for_each([&](int x) {
      if ((p.strict_up(x) & s).empty()) total += dp[s.without(x).bits];
    });
    dp[m] = total;
  }
  return dp[p.all().bits];
}

// Closed form for complete intersections:
//   n! * prod over edges (|J1|+|J2|)  /  prod over ideals |J|,
// evaluated exactly through prime exponents.  A negative exponent would mean
// the theory failed, so it is reported as an internal error.
inline std::uint64_t linear_extensions_ci(const Poset& p) {
  if (!check_ci(p).is_ci)
    throw NotCompleteIntersection("linear_extensions_ci: ring is not a complete intersection");
  GammaGraph g = build_gamma(p);
  int n = p.size();
  std::vector<int> exps(static_cast<std::size_t>(2 * n + 2), 0);
  auto factor = [&](int x, int mult) {
    for (int q = 2; q * q <= x; ++q)
      while (x % q == 0) {
        exps[static_cast<std::size_t>(q)] += mult;
        x /= q;
      }
    if (x > 1) exps[static_cast<std::size_t>(x)] += mult;
  };
  for (int k = 2; k <= n; ++k) factor(k, +1);
  for (auto [i1, i2] : g.edges)
    factor(g.vertices[static_cast<std::size_t>(i1)].members.count() +
               g.vertices[static_cast<std::size_t>(i2)].members.count(),
           +1);
  for (const Ideal& j : g.vertices) factor(j.members.count(), -1);
  std::uint64_t result = 1;
  for (std::size_t q = 2; q < exps.size(); ++q) {
    if (exps[q] < 0)
      throw InternalError("linear_extensions_ci: closed form is not an integer");
    for (int e = 0; e < exps[q]; ++e) {
      if (result > UINT64_MAX / q)
        throw ResourceLimit("linear_extensions_ci: count overflows 64 bits");
      result *= q;
    }
  }
  return result;
}

}  // namespace ppart
