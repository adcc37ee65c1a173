#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ppart/ideals.hpp"
#include "ppart/poset.hpp"

namespace ppart {

// Intersection graph of the connected order ideals: one vertex per ideal,
// an edge whenever two ideals overlap without either containing the other.
struct GammaGraph {
  std::vector<Ideal> vertices;               // ascending mask order
  std::vector<std::pair<int, int>> edges;    // (i, j) with i < j, lexicographic
  std::vector<int> degrees;                  // aligned with vertices
};

// Non-empty intersection and neither contains the other.
inline bool nontrivial_intersection(const Ideal& a, const Ideal& b) {
  Subset inter = a.members & b.members;
  return !inter.empty() && inter != a.members && inter != b.members;
}

inline GammaGraph build_gamma(const Poset& p) {
  GammaGraph g;
  g.vertices = connected_order_ideals(p);
  int m = static_cast<int>(g.vertices.size());
  g.degrees.assign(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (nontrivial_intersection(g.vertices[static_cast<std::size_t>(i)],
                                  g.vertices[static_cast<std::size_t>(j)])) {
        g.edges.emplace_back(i, j);
        ++g.degrees[static_cast<std::size_t>(i)];
        ++g.degrees[static_cast<std::size_t>(j)];
      }
  return g;
}

// Degree multiset in ascending order.
inline std::vector<int> degree_profile(const GammaGraph& g) {
  std::vector<int> d = g.degrees;
  std::sort(d.begin(), d.end());
  return d;
}

// A disjoint union of isolated vertices and isolated edges, i.e. max degree 1.
inline bool is_matching_union(const GammaGraph& g) {
  return std::all_of(g.degrees.begin(), g.degrees.end(), [](int d) { return d <= 1; });
}

// Generators of the edge ideal: one squarefree quadratic monomial U_i U_j per
// edge, reported as the index pairs themselves.
inline std::vector<std::pair<int, int>> edge_ideal(const GammaGraph& g) {
  return g.edges;
}

inline std::string to_dot(const GammaGraph& g) {
  std::string out = "graph gamma {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    out += "  v" + std::to_string(i) + " [label=\"" + to_string(g.vertices[i].members) + "\"];\n";
  for (auto [i, j] : g.edges)
    out += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace ppart
