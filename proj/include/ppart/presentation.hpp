#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppart/errors.hpp"
#include "ppart/gamma.hpp"
#include "ppart/ideals.hpp"
#include "ppart/recognizer.hpp"

namespace ppart {

// One defining binomial of the semigroup ring: for an overlapping pair of
// connected ideals J1, J2 it equates U_{J1} U_{J2} with the product of
// U_{J1 | J2} and one U per connected component of J1 & J2.  All fields are
// indices into the ascending list of connected order ideals; no coefficient
// field is involved, the relation is exponent-vector data only.
struct Binomial {
  int left1 = -1, left2 = -1;
  int union_index = -1;
  std::vector<int> component_indices;
  int degree = 0;  // |J1| + |J2|

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

enum class CiMethod { graph, count, recognizer };

struct CiVerdict {
  CiMethod method{};
  bool is_ci = false;
  int max_degree = 0;                              // graph method evidence
  int ideal_count = 0, edge_count = 0, rank = 0;   // count method evidence
};

struct CiReport {
  bool is_ci = false;
  CiVerdict graph, count, recognizer;
  std::optional<Certificate> certificate;  // present when the recognizer succeeds
};

namespace detail {

inline int ideal_index(const std::vector<Ideal>& ideals, Subset members) {
  auto it = std::lower_bound(ideals.begin(), ideals.end(), members,
                             [](const Ideal& j, Subset m) { return j.members < m; });
  if (it == ideals.end() || it->members != members)
    throw InternalError("derived ideal " + to_string(members) +
                        " is missing from the connected ideal list");
  return static_cast<int>(it - ideals.begin());
}

// Rank over the rationals by fraction-free (Bareiss) elimination; entries of
// interest here are 0/1, so 64-bit intermediates are ample at desk scale.
inline int rational_rank(std::vector<std::vector<std::int64_t>> a) {
  int rows = static_cast<int>(a.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(a[0].size());
  std::int64_t prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(r)]);
    for (int i = r + 1; i < rows; ++i) {
      auto& ri = a[static_cast<std::size_t>(i)];
      auto& rr = a[static_cast<std::size_t>(r)];
      for (int j = c + 1; j < cols; ++j) {
        __int128 v = static_cast<__int128>(rr[static_cast<std::size_t>(c)]) *
                         ri[static_cast<std::size_t>(j)] -
                     static_cast<__int128>(ri[static_cast<std::size_t>(c)]) *
                         rr[static_cast<std::size_t>(j)];
        ri[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(v / prev);
      }
      ri[static_cast<std::size_t>(c)] = 0;
    }
    prev = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    ++r;
  }
  return r;
}

}  // namespace detail

// One binomial per edge of the intersection graph, in edge order.
inline std::vector<Binomial> binomial_generators(const Poset& p) {
  GammaGraph g = build_gamma(p);
  std::vector<Binomial> out;
  out.reserve(g.edges.size());
  for (auto [i, j] : g.edges) {
    const Ideal& j1 = g.vertices[static_cast<std::size_t>(i)];
    const Ideal& j2 = g.vertices[static_cast<std::size_t>(j)];
    Binomial b;
    b.left1 = i;
    b.left2 = j;
    b.union_index = detail::ideal_index(g.vertices, j1.members | j2.members);
    for (Subset c : p.components(j1.members & j2.members))
      b.component_indices.push_back(detail::ideal_index(g.vertices, c));
    b.degree = j1.members.count() + j2.members.count();
    out.push_back(std::move(b));
  }
  return out;
}

// Both sides of the binomial must use every poset element equally often:
// chi(J1) + chi(J2) == chi(union) + sum of chi(component).
inline bool check_homogeneity(const Poset& p, const Binomial& b) {
  std::vector<Ideal> ideals = connected_order_ideals(p);
  auto member_mask = [&](int idx) {
    if (idx < 0 || idx >= static_cast<int>(ideals.size()))
      throw std::invalid_argument("check_homogeneity: ideal index out of range");
    return ideals[static_cast<std::size_t>(idx)].members;
  };
  std::vector<int> lhs(static_cast<std::size_t>(p.size()), 0);
  std::vector<int> rhs(static_cast<std::size_t>(p.size()), 0);
  auto add = [](std::vector<int>& acc, Subset s) {
    s.for_each([&](int x) { ++acc[static_cast<std::size_t>(x)]; });
  };
  add(lhs, member_mask(b.left1));
  add(lhs, member_mask(b.left2));
  add(rhs, member_mask(b.union_index));
  for (int c : b.component_indices) add(rhs, member_mask(c));
  return lhs == rhs;
}

// Decider 1: the ring is a complete intersection iff the intersection graph
// is a disjoint union of isolated vertices and edges.
inline CiVerdict ci_by_graph(const Poset& p) {
  GammaGraph g = build_gamma(p);
  CiVerdict v;
  v.method = CiMethod::graph;
  v.max_degree = g.degrees.empty() ? 0 : *std::max_element(g.degrees.begin(), g.degrees.end());
  v.is_ci = v.max_degree <= 1;
  return v;
}

// Decider 2: with m generators, s defining binomials and Krull dimension
// equal to the rank of the ideal indicator vectors, complete intersection
// means m - s == rank.  The rank must come out as n; anything else is a
// broken invariant, not a verdict.
inline CiVerdict ci_by_count(const Poset& p) {
  std::vector<Ideal> ideals = connected_order_ideals(p);
  GammaGraph g = build_gamma(p);
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(ideals.size());
  for (const Ideal& j : ideals) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(p.size()), 0);
    j.members.for_each([&](int x) { row[static_cast<std::size_t>(x)] = 1; });
    rows.push_back(std::move(row));
  }
  CiVerdict v;
  v.method = CiMethod::count;
  v.ideal_count = static_cast<int>(ideals.size());
  v.edge_count = static_cast<int>(g.edges.size());
  v.rank = detail::rational_rank(std::move(rows));
  if (v.rank != p.size())
    throw InternalError("indicator vectors of connected ideals have rank " +
                        std::to_string(v.rank) + ", expected " + std::to_string(p.size()));
  v.is_ci = (v.ideal_count - v.edge_count == v.rank);
  return v;
}

// Run all three deciders; they are independent and must agree.
inline CiReport check_ci(const Poset& p) {
  CiReport rep;
  rep.graph = ci_by_graph(p);
  rep.count = ci_by_count(p);
  rep.certificate = recognize(p);
  rep.recognizer.method = CiMethod::recognizer;
  rep.recognizer.is_ci = rep.certificate.has_value();
  if (rep.graph.is_ci != rep.count.is_ci || rep.count.is_ci != rep.recognizer.is_ci)
    throw MethodDisagreement(
        std::string("complete intersection deciders disagree: graph=") +
        (rep.graph.is_ci ? "true" : "false") + " count=" + (rep.count.is_ci ? "true" : "false") +
        " recognizer=" + (rep.recognizer.is_ci ? "true" : "false"));
  rep.is_ci = rep.graph.is_ci;
  return rep;
}

}  // namespace ppart
