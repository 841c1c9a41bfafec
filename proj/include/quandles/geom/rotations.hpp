#pragma once

#include <stdexcept>

#include "quandles/geom/polytope.hpp"
#include "quandles/geom/quaternion.hpp"

namespace quandles {

// A vertex v together with its distinguished rotation r_v: a special
// orthogonal matrix fixing v and mapping the vertex set to itself.  The
// family is equivariant: r_{g(v)} = g r_v g^-1 for every symmetry g
// arising from the family itself.
struct PointedRotation {
  ExactVector vertex;
  ExactMatrix rotation;
};

namespace detail {

inline ExactMatrix cross_product_matrix(const ExactVector& v) {
  ExactMatrix k(3);
  k.at(0, 1) = -v[2];
  k.at(0, 2) = v[1];
  k.at(1, 0) = v[2];
  k.at(1, 2) = -v[0];
  k.at(2, 0) = -v[1];
  k.at(2, 1) = v[0];
  return k;
}

// Rotation by 2*pi/m about the axis through v, via the Rodrigues form
// R = I + s K + t K^2 with K the cross-product matrix of the
// unnormalized axis.  The scalars s = sin(2pi/m)/|v| and
// t = (1 - cos(2pi/m))/|v|^2 are exact in Q(sqrt5) for each model; the
// sign of s fixes the orientation of the family.
inline ExactMatrix axis_rotation(const ExactVector& v, const Sqrt5& s,
                                 const Sqrt5& t) {
  ExactMatrix k = cross_product_matrix(v);
  return ExactMatrix::identity(3) + (s * k) + (t * (k * k));
}

// Orientation and angle data per 3D model.
inline void rodrigues_scalars(SchlafliSymbol sym, Sqrt5& s, Sqrt5& t) {
  const Sqrt5 half(rat(1, 2));
  switch (sym) {
    case SchlafliSymbol::Tetrahedron:
      // |v|^2 = 3, angle 2pi/3: sin/|v| = 1/2, (1-cos)/|v|^2 = 1/2
      s = -half;  // orientation: r_(1,1,1) is (x,y,z) -> (y,z,x)
      t = half;
      return;
    case SchlafliSymbol::Octahedron:
      // |v| = 1, angle pi/2
      s = 1;
      t = 1;
      return;
    case SchlafliSymbol::Icosahedron:
      // |v|^2 = 2 + phi, angle 2pi/5: sin/|v| = 1/2,
      // (1-cos)/|v|^2 = (2-phi)/2
      s = half;
      t = (Sqrt5(2) - Sqrt5::phi()) * half;
      return;
    default:
      throw std::invalid_argument("not a 3D model");
  }
}

// The multiplier quaternion of the 4D rotation family.  r_v is the
// double rotation x -> u x (v^-1 u^-1 v), a simple rotation by 2*pi/m
// fixing v; u is returned unnormalized together with its squared norm.
inline Quaternion multiplier_quaternion(SchlafliSymbol sym) {
  const Sqrt5 half(rat(1, 2));
  const Sqrt5 phi = Sqrt5::phi();
  switch (sym) {
    case SchlafliSymbol::Cell16:
      return {half, half, half, half};  // (1+i+j+k)/2, order 6, u^3 = -1
    case SchlafliSymbol::Cell24:
      return {1, 1, 0, 0};  // 1+i: order 8 after normalization, u^4 = -4
    case SchlafliSymbol::Cell600:
      // order 10 after normalization, u^5 = -1
      return {-(phi - Sqrt5(1)) * half, 0, phi * half, half};
    default:
      throw std::invalid_argument("not a 4D model");
  }
}

}  // namespace detail

// The distinguished rotation of the given vertex.
inline PointedRotation vertex_rotation(const PolytopeModel& model, int index) {
  if (index < 0 || index >= (int)model.vertices.size())
    throw std::out_of_range("vertex index out of range");
  const ExactVector& v = model.vertices[index];
  if (symbol_dimension(model.symbol) == 3) {
    Sqrt5 s, t;
    detail::rodrigues_scalars(model.symbol, s, t);
    return {v, detail::axis_rotation(v, s, t)};
  }
  Quaternion u = detail::multiplier_quaternion(model.symbol);
  Quaternion qv = Quaternion::from_vector(v);
  Quaternion side = qv.conjugate() * u.conjugate() * qv;
  Sqrt5 scale = (u.norm_squared() * qv.norm_squared()).inverse();
  ExactMatrix m =
      left_multiplication_matrix(u) * right_multiplication_matrix(side);
  return {v, scale * m};
}

}  // namespace quandles
