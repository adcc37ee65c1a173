#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

#include "ppart/errors.hpp"
#include "ppart/poset.hpp"

namespace ppart {

// Non-empty down-closed subset of a poset, with its connectivity cached.
struct Ideal {
  Subset members;
  bool connected = false;

  friend bool operator==(const Ideal&, const Ideal&) = default;
};

// A weak P-partition: f(x) >= f(y) >= 0 whenever x < y.  Plain value vector;
// validity is checked by is_p_partition.
using PPartition = std::vector<int>;

namespace detail {

inline bool down_closed(const Poset& p, Subset s) {
  bool ok = true;
  s.for_each([&](int x) {
    if (!p.strict_down(x).subset_of(s)) ok = false;
  });
  return ok;
}

}  // namespace detail

// All non-empty order ideals in ascending mask order.  Enumeration walks all
// 2^n subsets, so sizes beyond 22 elements are refused.
inline std::vector<Ideal> order_ideals(const Poset& p) {
  if (p.size() > 22) throw ResourceLimit("order ideal enumeration beyond 22 elements");
  std::vector<Ideal> out;
  std::uint64_t limit = std::uint64_t{1} << p.size();
  for (std::uint64_t m = 1; m < limit; ++m) {
    Subset s{m};
    if (detail::down_closed(p, s)) out.push_back(Ideal{s, p.is_connected(s)});
  }
  return out;
}

inline std::vector<Ideal> connected_order_ideals(const Poset& p) {
  std::vector<Ideal> out = order_ideals(p);
  std::erase_if(out, [](const Ideal& j) { return !j.connected; });
  return out;
}

// Indicator vector of an ideal.
inline PPartition chi(const Poset& p, const Ideal& j) {
  if (!j.members.subset_of(p.all())) throw std::invalid_argument("chi: ideal mentions foreign elements");
  PPartition v(static_cast<std::size_t>(p.size()), 0);
  j.members.for_each([&](int x) { v[static_cast<std::size_t>(x)] = 1; });
  return v;
}

inline bool is_p_partition(const Poset& p, const PPartition& f) {
  if (f.size() != static_cast<std::size_t>(p.size()))
    throw std::invalid_argument("is_p_partition: length does not match poset");
  for (int v : f)
    if (v < 0) return false;
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if (p.less(i, j) && f[static_cast<std::size_t>(i)] < f[static_cast<std::size_t>(j)])
        return false;
  return true;
}

// Greedy decomposition of f into indicator vectors of connected ideals:
// the support of a valid f is down-closed, each of its connected components
// is a connected ideal, and subtracting their indicators leaves a valid
// P-partition again.  Returns the multiset sorted in ascending mask order.
inline std::vector<Ideal> decompose(const Poset& p, PPartition f) {
  if (!is_p_partition(p, f)) throw std::invalid_argument("decompose: not a P-partition");
  std::vector<Ideal> parts;
  while (true) {
    Subset support;
    for (int x = 0; x < p.size(); ++x)
      if (f[static_cast<std::size_t>(x)] > 0) support |= Subset::single(x);
    if (support.empty()) break;
    assert(detail::down_closed(p, support));
    for (Subset c : p.components(support)) {
      parts.push_back(Ideal{c, true});
      c.for_each([&](int x) { --f[static_cast<std::size_t>(x)]; });
    }
  }
  std::sort(parts.begin(), parts.end(),
            [](const Ideal& a, const Ideal& b) { return a.members < b.members; });
  return parts;
}

// True when f admits no splitting f = g + h into two non-zero P-partitions.
// Decided by exhaustive search over the box 0 <= g <= f.
inline bool is_atom(const Poset& p, const PPartition& f) {
  if (!is_p_partition(p, f)) throw std::invalid_argument("is_atom: not a P-partition");
  bool zero = std::all_of(f.begin(), f.end(), [](int v) { return v == 0; });
  if (zero) throw std::invalid_argument("is_atom: zero vector");
  std::size_t n = f.size();
  PPartition g(n, 0), h(f);
  while (true) {
    // advance the odometer over the box
    std::size_t k = 0;
    while (k < n && g[k] == f[k]) {
      h[k] += g[k];
      g[k] = 0;
      ++k;
    }
    if (k == n) break;
    ++g[k];
    --h[k];
    bool g_zero = std::all_of(g.begin(), g.end(), [](int v) { return v == 0; });
    bool h_zero = std::all_of(h.begin(), h.end(), [](int v) { return v == 0; });
    if (g_zero || h_zero) continue;
    if (is_p_partition(p, g) && is_p_partition(p, h)) return false;
  }
  return true;
}

}  // namespace ppart
