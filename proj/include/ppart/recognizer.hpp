#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppart/errors.hpp"
#include "ppart/poset.hpp"

namespace ppart {

// Construction certificate: a build tree whose leaves are single elements
// (labelled with indices of the target poset) and whose internal nodes are
// the three forest-building operations.  Stored as an index arena so the
// value is copyable and cheap to serialize.
struct Certificate {
  enum class Kind { Single, Union, Hang, Dup };

  struct Node {
    Kind kind;
    int label = -1;   // Single: the element; Hang/Dup: the anchor a
    int label2 = -1;  // Dup: the clone a'
    int left = -1;    // Union: left part; Hang: the poset hung under; Dup: the base
    int right = -1;   // Union: right part; Hang: the part hung below a
    friend bool operator==(const Node&, const Node&) = default;
  };

  std::vector<Node> nodes;
  int root = -1;

  friend bool operator==(const Certificate&, const Certificate&) = default;

  static Certificate single(int label) {
    Certificate c;
    c.nodes.push_back(Node{Kind::Single, label, -1, -1, -1});
    c.root = 0;
    return c;
  }

  static Certificate union_of(Certificate a, Certificate b) {
    int off = a.absorb(b);
    a.nodes.push_back(Node{Kind::Union, -1, -1, a.root, b.root + off});
    a.root = static_cast<int>(a.nodes.size()) - 1;
    return a;
  }

  static Certificate hang_under(Certificate base, int a, Certificate below) {
    int off = base.absorb(below);
    base.nodes.push_back(Node{Kind::Hang, a, -1, base.root, below.root + off});
    base.root = static_cast<int>(base.nodes.size()) - 1;
    return base;
  }

  static Certificate duplicated(Certificate base, int a, int a_prime) {
    base.nodes.push_back(Node{Kind::Dup, a, a_prime, base.root, -1});
    base.root = static_cast<int>(base.nodes.size()) - 1;
    return base;
  }

private:
  // Append other's nodes, returning the index offset they were shifted by.
  int absorb(Certificate& other) {
    int off = static_cast<int>(nodes.size());
    for (Node n : other.nodes) {
      if (n.left >= 0) n.left += off;
      if (n.right >= 0) n.right += off;
      nodes.push_back(n);
    }
    return off;
  }
};

// First connected component (ascending mask order) and the rest, when the
// poset is disconnected.
inline std::optional<std::pair<Subset, Subset>> find_split(const Poset& p) {
  if (p.size() == 0) throw std::invalid_argument("find_split: empty poset");
  std::vector<Subset> comps = p.components(p.all());
  if (comps.size() < 2) return std::nullopt;
  return std::make_pair(comps[0], p.all().minus(comps[0]));
}

// Lexicographically smallest incomparable pair (a, a') such that a and a'
// share their strict down-set D and strict up-set, and removing a' leaves a
// poset in which duplication at a is legal (every d in D must see exactly
// [a] above it once D itself is discarded).  That residual condition is what
// separates a true clone from coincidences like the claw's three tips.
inline std::optional<std::pair<int, int>> find_duplication(const Poset& p) {
  int n = p.size();
  for (int a = 0; a < n; ++a)
    for (int a2 = a + 1; a2 < n; ++a2) {
      if (p.less(a, a2) || p.less(a2, a)) continue;
      if (p.strict_down(a) != p.strict_down(a2)) continue;
      if (p.strict_up(a) != p.strict_up(a2)) continue;
      Subset d = p.strict_down(a);
      bool ok = true;
      d.for_each([&](int x) {
        if (p.up_set(x).without(a2).minus(d) != p.up_set(a)) ok = false;
      });
      if (ok) return std::make_pair(a, a2);
    }
  return std::nullopt;
}

// Smallest anchor a such that some components of P \ [a] hang entirely below
// a: a component qualifies when each of its maximal elements sees exactly
// [a] strictly above itself.  Returns the union Q of qualifying components.
// Disconnected posets are the split step's job and report no hanging here.
inline std::optional<std::pair<int, Subset>> find_hanging(const Poset& p) {
  int n = p.size();
  if (n < 2 || !p.is_connected(p.all())) return std::nullopt;
  for (int a = 0; a < n; ++a) {
    Subset rest = p.all().minus(p.up_set(a));
    if (rest.empty()) continue;
    Subset kept;
    for (Subset k : p.components(rest)) {
      bool all_good = true;
      k.for_each([&](int m) {
        if (!(p.strict_up(m) & k).empty()) return;  // not maximal in k
        if (p.strict_up(m) != p.up_set(a)) all_good = false;
      });
      if (all_good) kept |= k;
    }
    if (!kept.empty()) return std::make_pair(a, kept);
  }
  return std::nullopt;
}

namespace detail {

struct Replayed {
  Poset poset;
  std::vector<int> labels;  // element index -> label carried by the certificate
};

inline int label_index(const std::vector<int>& labels, int label, const char* op) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  throw CertificateError(std::string(op) + ": label " + std::to_string(label) +
                         " not present in subtree");
}

inline Replayed replay_node(const Certificate& c, int idx) {
  if (idx < 0 || idx >= static_cast<int>(c.nodes.size()))
    throw CertificateError("certificate node index out of range");
  const Certificate::Node& nd = c.nodes[static_cast<std::size_t>(idx)];
  switch (nd.kind) {
    case Certificate::Kind::Single: {
      return Replayed{Poset::from_closure(1, {Subset{}}), {nd.label}};
    }
    case Certificate::Kind::Union: {
      Replayed l = replay_node(c, nd.left);
      Replayed r = replay_node(c, nd.right);
      Replayed out{disjoint_union(l.poset, r.poset), std::move(l.labels)};
      out.labels.insert(out.labels.end(), r.labels.begin(), r.labels.end());
      return out;
    }
    case Certificate::Kind::Hang: {
      Replayed base = replay_node(c, nd.left);
      Replayed below = replay_node(c, nd.right);
      int a = label_index(base.labels, nd.label, "hang");
      Replayed out{hang(base.poset, a, below.poset), std::move(base.labels)};
      out.labels.insert(out.labels.end(), below.labels.begin(), below.labels.end());
      return out;
    }
    case Certificate::Kind::Dup: {
      Replayed base = replay_node(c, nd.left);
      int a = label_index(base.labels, nd.label, "dup");
      Replayed out{duplicate(base.poset, a), std::move(base.labels)};
      out.labels.push_back(nd.label2);
      return out;
    }
  }
  throw CertificateError("corrupt certificate node");
}

}  // namespace detail

// Re-run the recorded construction and return the result on the original
// element indexing (leaf and clone labels must form a permutation of 0..n-1).
inline Poset replay(const Certificate& c) {
  detail::Replayed r = detail::replay_node(c, c.root);
  int n = static_cast<int>(r.labels.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int lab : r.labels) {
    if (lab < 0 || lab >= n || seen[static_cast<std::size_t>(lab)])
      throw CertificateError("labels do not form a permutation of 0..n-1");
    seen[static_cast<std::size_t>(lab)] = true;
  }
  std::vector<Subset> up(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (r.poset.less(i, j))
        up[static_cast<std::size_t>(r.labels[static_cast<std::size_t>(i)])] |=
            Subset::single(r.labels[static_cast<std::size_t>(j)]);
  return Poset::from_closure(n, std::move(up));
}

// Replays c and compares for exact relation equality with p.  Certificates
// that cannot be replayed at all verify as false.
inline bool verify_certificate(const Poset& p, const Certificate& c) {
  try {
    return replay(c) == p;
  } catch (const Error&) {
    return false;
  }
}

namespace detail {

inline std::optional<Certificate> recognize_impl(const Poset& p, const std::vector<int>& labels) {
  int n = p.size();
  if (n == 1) return Certificate::single(labels[0]);

  auto sub_labels = [&](Subset s) {
    std::vector<int> out;
    s.for_each([&](int x) { out.push_back(labels[static_cast<std::size_t>(x)]); });
    return out;
  };

  if (auto split = find_split(p)) {
    auto [first, rest] = *split;
    auto l = recognize_impl(p.induced(first), sub_labels(first));
    if (!l) return std::nullopt;
    auto r = recognize_impl(p.induced(rest), sub_labels(rest));
    if (!r) return std::nullopt;
    return Certificate::union_of(std::move(*l), std::move(*r));
  }
  if (auto dup = find_duplication(p)) {
    auto [a, a2] = *dup;
    Subset keep = p.all().without(a2);
    auto base = recognize_impl(p.induced(keep), sub_labels(keep));
    if (!base) return std::nullopt;
    return Certificate::duplicated(std::move(*base),
                                   labels[static_cast<std::size_t>(a)],
                                   labels[static_cast<std::size_t>(a2)]);
  }
  if (auto hg = find_hanging(p)) {
    auto [a, q] = *hg;
    Subset keep = p.all().minus(q);
    auto base = recognize_impl(p.induced(keep), sub_labels(keep));
    if (!base) return std::nullopt;
    auto below = recognize_impl(p.induced(q), sub_labels(q));
    if (!below) return std::nullopt;
    return Certificate::hang_under(std::move(*base), labels[static_cast<std::size_t>(a)],
                                   std::move(*below));
  }
  return std::nullopt;
}

}  // namespace detail

// Decide whether p is a forest with duplication.  A returned certificate has
// already been replayed and checked against p, so a present value is sound by
// construction; std::nullopt means no decomposition step applied somewhere.
inline std::optional<Certificate> recognize(const Poset& p) {
  if (p.size() == 0) throw std::invalid_argument("recognize: empty poset");
  std::vector<int> labels(static_cast<std::size_t>(p.size()));
  std::iota(labels.begin(), labels.end(), 0);
  std::optional<Certificate> cert = detail::recognize_impl(p, labels);
  if (cert && !verify_certificate(p, *cert))
    throw InternalError("recognizer produced a certificate that does not replay");
  return cert;
}

inline std::string to_text(const Certificate& c) {
  std::string out;
  auto rec = [&](auto&& self, int idx, int depth) -> void {
    const Certificate::Node& nd = c.nodes[static_cast<std::size_t>(idx)];
    out.append(static_cast<std::size_t>(2 * depth), ' ');
    switch (nd.kind) {
      case Certificate::Kind::Single:
        out += "single " + std::to_string(nd.label) + "\n";
        break;
      case Certificate::Kind::Union:
        out += "union\n";
        self(self, nd.left, depth + 1);
        self(self, nd.right, depth + 1);
        break;
      case Certificate::Kind::Hang:
        out += "hang a=" + std::to_string(nd.label) + "\n";
        self(self, nd.left, depth + 1);
        self(self, nd.right, depth + 1);
        break;
      case Certificate::Kind::Dup:
        out += "dup a=" + std::to_string(nd.label) + " a'=" + std::to_string(nd.label2) + "\n";
        self(self, nd.left, depth + 1);
        break;
    }
  };
  rec(rec, c.root, 0);
  return out;
}

}  // namespace ppart
