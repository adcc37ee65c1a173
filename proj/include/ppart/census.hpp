#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "ppart/errors.hpp"
#include "ppart/hilbert.hpp"
#include "ppart/poset.hpp"
#include "ppart/presentation.hpp"
#include "ppart/recognizer.hpp"

namespace ppart {

// splitmix64: the standard 64-bit splittable generator (Steele, Lea,
// Flood); fixed constants, identical output on every platform.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

// Random poset: each pair i < j (visited in lexicographic order, one draw per
// pair regardless of p) receives the relation i < j with probability p, then
// the transitive closure is taken.  The low-to-high orientation can never
// form a cycle.  The acceptance threshold is computed from p at 2^-53
// resolution so results are identical across conforming platforms.
inline Poset random_poset(int n, double p, SplitMix64& rng) {
  if (n < 0 || n > 64) throw std::invalid_argument("random_poset: n out of range");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_poset: p outside [0,1]");
  std::uint64_t threshold = static_cast<std::uint64_t>(p * 9007199254740992.0) << 11;
  bool always = p >= 1.0;
  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::uint64_t draw = rng.next();
      if (always || draw < threshold) rels.emplace_back(i, j);
    }
  return Poset::from_relations(n, rels);
}

inline Poset random_poset(int n, double p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_poset(n, p, rng);
}

// Visit every labeled poset on {0..n-1} exactly once, in a fixed order: each
// unordered pair (i, j), i < j, taken lexicographically, is assigned one of
// {incomparable, i < j, j < i} (tried in that order, depth first), and an
// assignment is kept iff the resulting relation is already transitively
// closed.  Irreflexivity and antisymmetry hold by construction.
template <typename F>
void for_each_labeled_poset(int n, F&& f) {
  if (n < 0 || n > 16) throw std::invalid_argument("for_each_labeled_poset: n out of range");
  if (n == 0) {
    f(Poset());
    return;
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Subset> up(static_cast<std::size_t>(n));
  auto transitive = [&]() {
    for (int i = 0; i < n; ++i) {
      bool ok = true;
      up[static_cast<std::size_t>(i)].for_each([&](int j) {
        if (!up[static_cast<std::size_t>(j)].subset_of(up[static_cast<std::size_t>(i)])) ok = false;
      });
      if (!ok) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == pairs.size()) {
      if (transitive()) f(Poset::from_closure(n, up));
      return;
    }
    auto [i, j] = pairs[k];
    self(self, k + 1);
    up[static_cast<std::size_t>(i)] |= Subset::single(j);
    self(self, k + 1);
    up[static_cast<std::size_t>(i)] = up[static_cast<std::size_t>(i)].without(j);
    up[static_cast<std::size_t>(j)] |= Subset::single(i);
    self(self, k + 1);
    up[static_cast<std::size_t>(j)] = up[static_cast<std::size_t>(j)].without(i);
  };
  rec(rec, 0);
}

// One census row per labeled poset: ideal/edge counts, the three
// complete-intersection verdicts (which must agree) and the number of linear
// extensions.
struct CensusRow {
  int n = 0;
  long long id = 0;  // index in enumeration order
  int m_ideals = 0;
  int s_edges = 0;
  bool ci_graph = false, ci_count = false, ci_recognizer = false;
  std::uint64_t extensions = 0;
};

inline std::vector<CensusRow> census(int n, bool up_to_iso = false) {
  if (n < 1 || n > 6) throw std::invalid_argument("census: n must be between 1 and 6");
  std::vector<CensusRow> rows;
  std::vector<Poset> reps;  // representatives kept so far (up_to_iso only)
  std::map<std::tuple<int, int, std::uint64_t>, std::vector<std::size_t>> buckets;
  long long id = 0;
  for_each_labeled_poset(n, [&](const Poset& p) {
    long long this_id = id++;
    CiReport rep = check_ci(p);  // throws MethodDisagreement on any mismatch
    CensusRow row;
    row.n = n;
    row.id = this_id;
    row.m_ideals = rep.count.ideal_count;
    row.s_edges = rep.count.edge_count;
    row.ci_graph = rep.graph.is_ci;
    row.ci_count = rep.count.is_ci;
    row.ci_recognizer = rep.recognizer.is_ci;
    row.extensions = linear_extensions_brute(p);
    if (up_to_iso) {
      auto key = std::make_tuple(row.m_ideals, row.s_edges, row.extensions);
      for (std::size_t r : buckets[key])
        if (is_isomorphic(p, reps[r])) return;
      buckets[key].push_back(reps.size());
      reps.push_back(p);
    }
    rows.push_back(row);
  });
  return rows;
}

}  // namespace ppart
