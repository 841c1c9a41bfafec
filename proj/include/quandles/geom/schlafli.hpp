#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quandles/core/constructions.hpp"
#include "quandles/core/finite_quandle.hpp"
#include "quandles/geom/rotations.hpp"
#include "quandles/pres/enumerator.hpp"
#include "quandles/pres/presentation.hpp"

namespace quandles {

// Schlafli quandle built from exact polytope geometry.  Elements are the
// pairs (v, r_v), bijective with the vertices; the operation acts through
// the rotation component, u * v = r_v(u).
struct SchlafliQuandle {
  PolytopeModel model;
  std::vector<PointedRotation> elements;
  FiniteQuandle quandle;
  int v_index = -1, w_index = -1;  // designated generator pair
};

namespace detail {

inline bool lemma_relations_hold(const FiniteQuandle& q, int v, int w, int m) {
  if (q.op(q.op(v, w), v) != w) return false;
  if (q.op(q.op(w, v), w) != v) return false;
  int cur = w;
  for (int k = 0; k < m; ++k) cur = q.op(cur, v);
  return cur == w;
}

// The paper's generator pair for the 4D cells.
inline std::pair<ExactVector, ExactVector> cell_generator_pair(
    SchlafliSymbol sym) {
  const Sqrt5 half(rat(1, 2));
  const Sqrt5 phi = Sqrt5::phi();
  switch (sym) {
    case SchlafliSymbol::Cell16:
      return {ExactVector{1, 0, 0, 0}, ExactVector{0, 1, 0, 0}};
    case SchlafliSymbol::Cell24:
      return {ExactVector{1, 1, 0, 0}, ExactVector{0, 1, 0, 1}};
    case SchlafliSymbol::Cell600:
      // (e1, -(phi^-1 e1 + phi e3 - e4)/2)
      return {ExactVector{1, 0, 0, 0},
              ExactVector{-(phi - Sqrt5(1)) * half, 0, -phi * half, half}};
    default:
      throw std::invalid_argument("no pinned generator pair");
  }
}

}  // namespace detail

inline SchlafliQuandle build_schlafli_quandle(SchlafliSymbol sym) {
  SchlafliQuandle out;
  out.model = build_polytope(sym);
  const int n = (int)out.model.vertices.size();
  out.elements.reserve(n);
  for (int i = 0; i < n; ++i)
    out.elements.push_back(vertex_rotation(out.model, i));

  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int j = 0; j < n; ++j) {
    const ExactMatrix& r = out.elements[j].rotation;
    for (int i = 0; i < n; ++i) {
      int im = out.model.vertex_index(r * out.model.vertices[i]);
      if (im < 0)
        throw std::logic_error("rotation does not preserve the vertex set");
      table[i][j] = im;
    }
  }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "v" + std::to_string(i);
  out.quandle = FiniteQuandle(std::move(labels), std::move(table));

  const int m = symbol_m(sym);
  if (symbol_dimension(sym) == 4) {
    auto [pv, pw] = detail::cell_generator_pair(sym);
    out.v_index = out.model.vertex_index(pv);
    out.w_index = out.model.vertex_index(pw);
    if (out.v_index < 0 || out.w_index < 0)
      throw std::logic_error("designated vertex not in the vertex set");
  } else {
    // any adjacent pair satisfying the relations of the {3,m} presentation
    for (const auto& [i, j] : out.model.adjacency) {
      if (detail::lemma_relations_hold(out.quandle, i, j, m)) {
        out.v_index = i;
        out.w_index = j;
        break;
      }
      if (detail::lemma_relations_hold(out.quandle, j, i, m)) {
        out.v_index = j;
        out.w_index = i;
        break;
      }
    }
    if (out.v_index < 0)
      throw std::logic_error("no adjacent pair satisfies the relations");
  }
  out.quandle.set_generators({out.v_index, out.w_index});
  return out;
}

enum class ConstructionPath { Geometric, Algebraic };

// The {3,m} Schlafli quandle for m = 2..5 as a finite table with its
// designated pair.  {3,2} is the dihedral quandle of order 3 and is
// algebraic-only; the algebraic path for m >= 3 realizes the presentation
// by enumeration.
inline FiniteQuandle schlafli_3m_quandle(
    int m, ConstructionPath path = ConstructionPath::Geometric) {
  if (m < 2 || m > 5)
    throw std::invalid_argument("finite {3,m} quandles need 2 <= m <= 5");
  if (m == 2) {
    FiniteQuandle q = dihedral_quandle(3);
    q.set_generators({0, 1});  // (v*w)*v = w, (w*v)*w = v, w*^2 v = w
    return q;
  }
  if (path == ConstructionPath::Algebraic) {
    auto res = enumerate_presentation(schlafli_presentation(m));
    if (!res.finite())
      throw std::logic_error("{3,m} enumeration did not close");
    return *res.quandle;
  }
  SchlafliSymbol sym = m == 3   ? SchlafliSymbol::Tetrahedron
                       : m == 4 ? SchlafliSymbol::Octahedron
                                : SchlafliSymbol::Icosahedron;
  return build_schlafli_quandle(sym).quandle;
}

}  // namespace quandles
