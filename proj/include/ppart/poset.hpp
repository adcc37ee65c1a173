#pragma once

#include <algorithm>
#include <cassert>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ppart/errors.hpp"
#include "ppart/subset.hpp"

namespace ppart {

// Finite strict partial order on {0, ..., n-1}, n <= 64.  The relation is
// stored as its full transitive closure (one strict up-set mask per element);
// the cover pairs (transitive reduction) are derived once at construction.
// Every construction path validates irreflexivity, antisymmetry and
// transitivity, so a Poset in hand is always a genuine partial order.
class Poset {
public:
  Poset() = default;  // the empty poset

  // Build from generating relations i < j; the transitive closure is taken
  // automatically.  Throws CycleError when the closure would force i < i.
  static Poset from_relations(int n, const std::vector<std::pair<int, int>>& relations) {
    check_size(n);
    std::vector<Subset> up(static_cast<std::size_t>(n));
    for (auto [i, j] : relations) {
      if (i < 0 || j < 0 || i >= n || j >= n)
        throw std::invalid_argument("relation index out of range");
      if (i == j) throw std::invalid_argument("relation relates an element to itself");
      up[static_cast<std::size_t>(i)] |= Subset::single(j);
    }
    // Warshall closure on the up-set masks.
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (up[static_cast<std::size_t>(i)].contains(k))
          up[static_cast<std::size_t>(i)] |= up[static_cast<std::size_t>(k)];
    for (int i = 0; i < n; ++i)
      if (up[static_cast<std::size_t>(i)].contains(i))
        throw CycleError("relations close into a cycle through element " + std::to_string(i));
    Poset p = assemble(n, std::move(up));
    if (std::string why = p.violated_invariant(); !why.empty())
      throw InternalError("closure left an invalid order: " + why);
    return p;
  }

  // Build from an already transitively closed relation.  The caller promises
  // closure; violations are rejected with std::invalid_argument.
  static Poset from_closure(int n, std::vector<Subset> strict_up) {
    check_size(n);
    if (strict_up.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("strict_up size does not match n");
    for (const Subset& s : strict_up)
      if (!s.subset_of(Subset::full(n)))
        throw std::invalid_argument("strict_up mask mentions elements >= n");
    Poset p = assemble(n, std::move(strict_up));
    if (std::string why = p.violated_invariant(); !why.empty())
      throw std::invalid_argument("relation is not a closed partial order: " + why);
    return p;
  }

  int size() const { return n_; }
  Subset all() const { return Subset::full(n_); }

  bool less(int i, int j) const {
    assert(i >= 0 && i < n_ && j >= 0 && j < n_);
    return up_[static_cast<std::size_t>(i)].contains(j);
  }

  Subset strict_up(int x) const {
    assert(x >= 0 && x < n_);
    return up_[static_cast<std::size_t>(x)];
  }

  Subset strict_down(int x) const {
    assert(x >= 0 && x < n_);
    return down_[static_cast<std::size_t>(x)];
  }

  // Weak up-set [x] = {x} | {y : x < y} and weak down-set (x] likewise.
  Subset up_set(int x) const { return strict_up(x).with(x); }
  Subset down_set(int x) const { return strict_down(x).with(x); }

  // Cover pairs (i, j) of the transitive reduction, in lexicographic order.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  // Connectivity of the comparability graph induced on s.  The empty set is
  // not connected.
  bool is_connected(Subset s) const {
    if (s.empty()) return false;
    return component_of(s.min(), s) == s;
  }

  // Partition of s into connected components, listed in ascending mask order.
  std::vector<Subset> components(Subset s) const {
    std::vector<Subset> out;
    while (!s.empty()) {
      Subset c = component_of(s.min(), s);
      out.push_back(c);
      s = s.minus(c);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Subposet on s; elements are renumbered in ascending order of their old
  // indices.
  Poset induced(Subset s) const {
    std::vector<int> elems = to_vector(s);
    int m = static_cast<int>(elems.size());
    std::vector<Subset> up(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l)
        if (less(elems[static_cast<std::size_t>(k)], elems[static_cast<std::size_t>(l)]))
          up[static_cast<std::size_t>(k)] |= Subset::single(l);
    Poset p = assemble(m, std::move(up));
    assert(p.violated_invariant().empty());
    return p;
  }

  // Exact equality: same element count, identical relation.
  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.up_ == b.up_;
  }

private:
  int n_ = 0;
  std::vector<Subset> up_;    // strict up-set per element (transitive closure)
  std::vector<Subset> down_;  // strict down-set per element (derived)
  std::vector<std::pair<int, int>> covers_;

  static void check_size(int n) {
    if (n < 0) throw std::invalid_argument("negative element count");
    if (n > 64) throw std::invalid_argument("element count exceeds 64");
  }

  static Poset assemble(int n, std::vector<Subset> up) {
    Poset p;
    p.n_ = n;
    p.up_ = std::move(up);
    p.down_.assign(static_cast<std::size_t>(n), Subset{});
    for (int i = 0; i < n; ++i)
      p.up_[static_cast<std::size_t>(i)].for_each(
          [&](int j) { p.down_[static_cast<std::size_t>(j)] |= Subset::single(i); });
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (p.less(i, j) && (p.strict_up(i) & p.strict_down(j)).empty())
          p.covers_.emplace_back(i, j);
    return p;
  }

  // Empty string when all order axioms hold, otherwise a description.
  std::string violated_invariant() const {
    for (int i = 0; i < n_; ++i) {
      if (up_[static_cast<std::size_t>(i)].contains(i))
        return "element " + std::to_string(i) + " is below itself";
      Subset u = up_[static_cast<std::size_t>(i)];
      bool bad = false;
      u.for_each([&](int j) {
        if (less(j, i)) bad = true;                       // antisymmetry
        if (!strict_up(j).subset_of(u)) bad = true;       // transitivity
      });
      if (bad) return "relation through element " + std::to_string(i) + " is not a partial order";
    }
    return {};
  }

  Subset component_of(int x, Subset s) const {
    Subset comp = Subset::single(x);
    while (true) {
      Subset next = comp;
      comp.for_each([&](int y) {
        next |= (up_[static_cast<std::size_t>(y)] | down_[static_cast<std::size_t>(y)]);
      });
      next &= s;
      if (next == comp) return comp;
      comp = next;
    }
  }
};

// Poset file grammar: optional '#' comment lines and blank lines anywhere,
// one "n <count>" header, then one "<i> <j>" line per generating relation.
inline Poset parse_poset(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  long long n = -1;
  std::vector<std::pair<int, int>> rels;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;        // blank
    if (first[0] == '#') continue;       // comment
    std::string extra;
    if (n < 0) {
      if (first != "n")
        throw ParseError("line " + std::to_string(line_no) + ": expected header \"n <count>\"");
      if (!(ls >> n) || n < 0)
        throw ParseError("line " + std::to_string(line_no) + ": bad element count");
      if (n > 64)
        throw ParseError("line " + std::to_string(line_no) + ": element count exceeds 64");
      if (ls >> extra)
        throw ParseError("line " + std::to_string(line_no) + ": trailing tokens after header");
      continue;
    }
    long long i = -1, j = -1;
    std::istringstream rs(line);
    if (!(rs >> i >> j))
      throw ParseError("line " + std::to_string(line_no) + ": expected \"<i> <j>\"");
    if (rs >> extra)
      throw ParseError("line " + std::to_string(line_no) + ": trailing tokens after relation");
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw ParseError("line " + std::to_string(line_no) + ": element index out of range");
    if (i == j)
      throw ParseError("line " + std::to_string(line_no) + ": relation relates an element to itself");
    rels.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  if (n < 0) throw ParseError("missing \"n <count>\" header");
  return Poset::from_relations(static_cast<int>(n), rels);
}

// Inverse of parse_poset up to the choice of generators: emits the header and
// the cover pairs, which regenerate the order.
inline std::string to_poset_file(const Poset& p) {
  std::string out = "n " + std::to_string(p.size()) + "\n";
  for (auto [i, j] : p.covers()) out += std::to_string(i) + " " + std::to_string(j) + "\n";
  return out;
}

// P + Q side by side; Q's elements are shifted up by P's size.
inline Poset disjoint_union(const Poset& p, const Poset& q) {
  int np = p.size(), nq = q.size();
  if (np + nq > 64) throw std::invalid_argument("union exceeds 64 elements");
  std::vector<Subset> up(static_cast<std::size_t>(np + nq));
  for (int i = 0; i < np; ++i) up[static_cast<std::size_t>(i)] = p.strict_up(i);
  for (int j = 0; j < nq; ++j)
    up[static_cast<std::size_t>(np + j)] = Subset(q.strict_up(j).bits << np);
  return Poset::from_closure(np + nq, std::move(up));
}

// Hang Q below a in P: every element of Q goes strictly below everything in
// the weak up-set [a].  Q's elements are shifted up by P's size.
inline Poset hang(const Poset& p, int a, const Poset& q) {
  if (a < 0 || a >= p.size()) throw std::invalid_argument("hang: no such element");
  int np = p.size(), nq = q.size();
  if (np + nq > 64) throw std::invalid_argument("hang exceeds 64 elements");
  std::vector<Subset> up(static_cast<std::size_t>(np + nq));
  for (int i = 0; i < np; ++i) up[static_cast<std::size_t>(i)] = p.strict_up(i);
  for (int j = 0; j < nq; ++j)
    up[static_cast<std::size_t>(np + j)] = Subset(q.strict_up(j).bits << np) | p.up_set(a);
  return Poset::from_closure(np + nq, std::move(up));
}

// Duplicate a: append a new element a' = n that repeats a's comparabilities
// (strictly below everything strictly above a, strictly above a's strict
// down-set D) while staying incomparable to a itself.  Legal exactly when P
// hangs D below a, i.e. every d in D satisfies up_set(d) \ D = up_set(a);
// D may be empty.
inline Poset duplicate(const Poset& p, int a) {
  if (a < 0 || a >= p.size()) throw std::invalid_argument("duplicate: no such element");
  int n = p.size();
  if (n + 1 > 64) throw std::invalid_argument("duplicate exceeds 64 elements");
  Subset d = p.strict_down(a);
  bool ok = true;
  d.for_each([&](int x) {
    if (p.up_set(x).minus(d) != p.up_set(a)) ok = false;
  });
  if (!ok)
    throw InvalidDuplication("no hanging decomposition below element " + std::to_string(a));
  std::vector<Subset> up(static_cast<std::size_t>(n + 1));
  for (int i = 0; i < n; ++i) up[static_cast<std::size_t>(i)] = p.strict_up(i);
  up[static_cast<std::size_t>(n)] = p.strict_up(a);
  d.for_each([&](int x) { up[static_cast<std::size_t>(x)] |= Subset::single(n); });
  return Poset::from_closure(n + 1, std::move(up));
}

// Backtracking search for an order isomorphism, pruned by (|down|, |up|)
// signatures.  Intended for desk-scale posets.
inline bool is_isomorphic(const Poset& p, const Poset& q) {
  int n = p.size();
  if (n != q.size()) return false;
  auto sig = [](const Poset& r, int x) {
    return std::pair<int, int>(r.strict_down(x).count(), r.strict_up(x).count());
  };
  {
    std::vector<std::pair<int, int>> sp, sq;
    for (int x = 0; x < n; ++x) sp.push_back(sig(p, x)), sq.push_back(sig(q, x));
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return false;
  }
  std::vector<int> img(static_cast<std::size_t>(n), -1);
  Subset used;
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used.contains(y) || sig(p, i) != sig(q, y)) continue;
      bool fits = true;
      for (int j = 0; j < i && fits; ++j) {
        int z = img[static_cast<std::size_t>(j)];
        if (p.less(i, j) != q.less(y, z) || p.less(j, i) != q.less(z, y)) fits = false;
      }
      if (!fits) continue;
      img[static_cast<std::size_t>(i)] = y;
      used |= Subset::single(y);
      if (self(self, i + 1)) return true;
      used = used.without(y);
      img[static_cast<std::size_t>(i)] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace ppart
