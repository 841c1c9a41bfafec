#pragma once

#include "quandles/core/finite_quandle.hpp"

namespace quandles {

// A tessellation triangle: the three rotation relations
// x * z = y,  z * y = x,  y * x = z hold for the (ordered) triple.
inline bool triangle_check(const FiniteQuandle& q, int x, int y, int z) {
  return q.op(x, z) == y && q.op(z, y) == x && q.op(y, x) == z;
}

// Number of triangles incident to x: unordered triples {x,y,z} of distinct
// elements where some cyclic orientation passes triangle_check.
inline int triangles_around(const FiniteQuandle& q, int x) {
  int count = 0;
  for (int y = 0; y < q.order(); ++y) {
    if (y == x) continue;
    for (int z = y + 1; z < q.order(); ++z) {
      if (z == x) continue;
      if (triangle_check(q, x, y, z) || triangle_check(q, x, z, y)) ++count;
    }
  }
  return count;
}

}  // namespace quandles
