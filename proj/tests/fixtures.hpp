#pragma once

// The small named posets most tests revolve around, built from relation lists
// so the tests do not depend on the file parser.

#include <ppart/poset.hpp>

namespace fx {

inline ppart::Poset chain2() { return ppart::Poset::from_relations(2, {{0, 1}}); }
inline ppart::Poset anti2() { return ppart::Poset::from_relations(2, {}); }
inline ppart::Poset chain3() { return ppart::Poset::from_relations(3, {{0, 1}, {1, 2}}); }
inline ppart::Poset v3() { return ppart::Poset::from_relations(3, {{0, 1}, {0, 2}}); }
inline ppart::Poset lambda3() { return ppart::Poset::from_relations(3, {{0, 2}, {1, 2}}); }
inline ppart::Poset claw4() { return ppart::Poset::from_relations(4, {{0, 1}, {0, 2}, {0, 3}}); }
inline ppart::Poset diamond4() {
  return ppart::Poset::from_relations(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}
inline ppart::Poset k22() {
  return ppart::Poset::from_relations(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}
inline ppart::Poset single1() { return ppart::Poset::from_relations(1, {}); }

}  // namespace fx
