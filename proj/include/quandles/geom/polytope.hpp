#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "quandles/exact/linalg.hpp"

namespace quandles {

// Supported vertex-transitive models with triangular 2-faces.  {3,2} is
// handled algebraically elsewhere and has no geometric model here.
enum class SchlafliSymbol {
  Tetrahedron,   // {3,3}
  Octahedron,    // {3,4}
  Icosahedron,   // {3,5}
  Cell16,        // {3,3,4}
  Cell24,        // {3,4,3}
  Cell600,       // {3,3,5}
};

inline std::string symbol_name(SchlafliSymbol s) {
  switch (s) {
    case SchlafliSymbol::Tetrahedron: return "{3,3}";
    case SchlafliSymbol::Octahedron: return "{3,4}";
    case SchlafliSymbol::Icosahedron: return "{3,5}";
    case SchlafliSymbol::Cell16: return "{3,3,4}";
    case SchlafliSymbol::Cell24: return "{3,4,3}";
    case SchlafliSymbol::Cell600: return "{3,3,5}";
  }
  return "?";
}

// Vertex-rotation count of the related {3,m} tessellation.
inline int symbol_m(SchlafliSymbol s) {
  switch (s) {
    case SchlafliSymbol::Tetrahedron: return 3;
    case SchlafliSymbol::Octahedron: return 4;
    case SchlafliSymbol::Icosahedron: return 5;
    case SchlafliSymbol::Cell16: return 3;
    case SchlafliSymbol::Cell24: return 4;
    case SchlafliSymbol::Cell600: return 5;
  }
  return 0;
}

inline int symbol_dimension(SchlafliSymbol s) {
  switch (s) {
    case SchlafliSymbol::Tetrahedron:
    case SchlafliSymbol::Octahedron:
    case SchlafliSymbol::Icosahedron:
      return 3;
    default:
      return 4;
  }
}

// Exact vertex set plus the edge graph.  Adjacency is metric: pairs at the
// minimal nonzero squared distance.
struct PolytopeModel {
  SchlafliSymbol symbol;
  std::vector<ExactVector> vertices;
  std::set<std::pair<int, int>> adjacency;  // i < j
  Sqrt5 edge_length_squared;

  bool adjacent(int i, int j) const {
    if (i > j) std::swap(i, j);
    return adjacency.count({i, j}) > 0;
  }

  int vertex_index(const ExactVector& v) const {
    for (size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == v) return (int)i;
    return -1;
  }

  int degree(int i) const {
    int d = 0;
    for (size_t j = 0; j < vertices.size(); ++j)
      if ((int)j != i && adjacent(i, (int)j)) ++d;
    return d;
  }
};

namespace detail {

inline void push_sorted(std::vector<ExactVector>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

inline std::vector<ExactVector> vertices_of(SchlafliSymbol s) {
  const Sqrt5 phi = Sqrt5::phi();
  const Sqrt5 half(rat(1, 2));
  std::vector<ExactVector> vs;
  switch (s) {
    case SchlafliSymbol::Tetrahedron:
      // (+-1,+-1,+-1) with even sign product
      for (int sx : {1, -1})
        for (int sy : {1, -1})
          for (int sz : {1, -1})
            if (sx * sy * sz == 1)
              vs.push_back(ExactVector{sx, sy, sz});
      break;
    case SchlafliSymbol::Octahedron:
      for (int i = 0; i < 3; ++i)
        for (int sg : {1, -1}) {
          ExactVector v(3);
          v[i] = sg;
          vs.push_back(v);
        }
      break;
    case SchlafliSymbol::Icosahedron:
      // cyclic permutations of (0, +-1, +-phi)
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          ExactVector base{0, Sqrt5(s1), Sqrt5(s2) * phi};
          for (int r = 0; r < 3; ++r) {
            ExactVector v(3);
            for (int i = 0; i < 3; ++i) v[(i + r) % 3] = base[i];
            vs.push_back(v);
          }
        }
      break;
    case SchlafliSymbol::Cell16:
      for (int i = 0; i < 4; ++i)
        for (int sg : {1, -1}) {
          ExactVector v(4);
          v[i] = sg;
          vs.push_back(v);
        }
      break;
    case SchlafliSymbol::Cell24:
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
          for (int si : {1, -1})
            for (int sj : {1, -1}) {
              ExactVector v(4);
              v[i] = si;
              v[j] = sj;
              vs.push_back(v);
            }
      break;
    case SchlafliSymbol::Cell600: {
      // permutations of (+-1,0,0,0), all (+-1/2,..), and even permutations
      // of (+-phi/2, +-1/2, +-phi^-1/2, 0): the 120 unit quaternions of
      // the binary icosahedral group.
      for (int i = 0; i < 4; ++i)
        for (int sg : {1, -1}) {
          ExactVector v(4);
          v[i] = sg;
          vs.push_back(v);
        }
      for (int s0 : {1, -1})
        for (int s1 : {1, -1})
          for (int s2 : {1, -1})
            for (int s3 : {1, -1})
              vs.push_back(ExactVector{Sqrt5(s0) * half, Sqrt5(s1) * half,
                                       Sqrt5(s2) * half, Sqrt5(s3) * half});
      const Sqrt5 entries[4] = {phi * half, half, (phi - Sqrt5(1)) * half, 0};
      const int perms[12][4] = {{0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2},
                                {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 3, 2, 0},
                                {2, 0, 1, 3}, {2, 1, 3, 0}, {2, 3, 0, 1},
                                {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 2, 1, 0}};
      for (const auto& p : perms)
        for (int s0 : {1, -1})
          for (int s1 : {1, -1})
            for (int s2 : {1, -1}) {
              const int signs[3] = {s0, s1, s2};
              ExactVector v(4);
              int nz = 0;
              for (int pos = 0; pos < 4; ++pos) {
                Sqrt5 e = entries[pos];
                if (e != Sqrt5(0)) e = Sqrt5(signs[nz++]) * e;
                v[p[pos]] = e;
              }
              vs.push_back(v);
            }
      break;
    }
  }
  push_sorted(vs);
  return vs;
}

}  // namespace detail

inline PolytopeModel build_polytope(SchlafliSymbol s) {
  PolytopeModel m;
  m.symbol = s;
  m.vertices = detail::vertices_of(s);
  // minimal nonzero squared distance, then the edge set
  bool have = false;
  Sqrt5 best;
  const int n = (int)m.vertices.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Sqrt5 d2 = distance_squared(m.vertices[i], m.vertices[j]);
      if (!have || d2 < best) {
        best = d2;
        have = true;
      }
    }
  m.edge_length_squared = best;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (distance_squared(m.vertices[i], m.vertices[j]) == best)
        m.adjacency.insert({i, j});
  return m;
}

}  // namespace quandles
