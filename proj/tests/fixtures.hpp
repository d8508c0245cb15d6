#pragma once

#include "ppl/preorder.hpp"

namespace fixtures {

// Elements a..e carry labels 0..4: vertices {a,c}, {b}, {d}, {e} with ac < e, b < e, b < d.
inline ppl::Preorder running_example() {
  return ppl::Preorder::build({{0, 2}, {1}, {3}, {4}}, {{0, 3}, {1, 3}, {1, 2}});
}

// Minimum with two incomparable covers.
inline ppl::Preorder vee() { return ppl::Preorder::build({{0}, {1}, {2}}, {{0, 1}, {0, 2}}); }

inline ppl::Preorder single_vertex(int size) { return ppl::antichain_of({size}); }

}  // namespace fixtures
