#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ppart {

// Subset of {0, ..., 63} stored as a bitmask.  operator<=> compares the raw
// masks; that numeric order is the canonical order used for every list of
// subsets in this library.
struct Subset {
  std::uint64_t bits = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t raw) : bits(raw) {}

  static constexpr Subset single(int i) { return Subset(std::uint64_t{1} << i); }

  static constexpr Subset full(int n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  static constexpr Subset of(std::initializer_list<int> xs) {
    Subset s;
    for (int x : xs) s = s.with(x);
    return s;
  }

  constexpr bool empty() const { return bits == 0; }
  constexpr int count() const { return std::popcount(bits); }
  constexpr bool contains(int i) const { return (bits >> i) & 1u; }
  constexpr bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }
  constexpr Subset with(int i) const { return Subset(bits | (std::uint64_t{1} << i)); }
  constexpr Subset without(int i) const { return Subset(bits & ~(std::uint64_t{1} << i)); }
  constexpr Subset minus(Subset o) const { return Subset(bits & ~o.bits); }

  // Smallest element; only meaningful on a non-empty subset.
  int min() const { return std::countr_zero(bits); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits | b.bits); }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits & b.bits); }
  Subset& operator|=(Subset o) {
    bits |= o.bits;
    return *this;
  }
  Subset& operator&=(Subset o) {
    bits &= o.bits;
    return *this;
  }

  friend constexpr auto operator<=>(Subset, Subset) = default;
};

inline std::vector<int> to_vector(Subset s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(s.count()));
  s.for_each([&](int x) { out.push_back(x); });
  return out;
}

// "{0,1,2}" -- also the label format used in DOT output.
inline std::string to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int x) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace ppart
