#pragma once

#include "quandles/exact/linalg.hpp"

namespace quandles {

// Quaternion over Q(sqrt5), with e1 = 1 as the real axis and
// (e2, e3, e4) = (i, j, k).  Vertices of the 4D polytopes are treated as
// (possibly unnormalized) quaternions through this identification.
struct Quaternion {
  Sqrt5 w, x, y, z;

  static Quaternion from_vector(const ExactVector& v) {
    return {v[0], v[1], v[2], v[3]};
  }
  ExactVector to_vector() const { return ExactVector{w, x, y, z}; }

  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  Sqrt5 norm_squared() const { return w * w + x * x + y * y + z * z; }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

// Matrix of left multiplication x -> q x (columns are q * e_j).
inline ExactMatrix left_multiplication_matrix(const Quaternion& q) {
  ExactMatrix m(4);
  const Quaternion units[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (int j = 0; j < 4; ++j) {
    Quaternion col = q * units[j];
    m.at(0, j) = col.w;
    m.at(1, j) = col.x;
    m.at(2, j) = col.y;
    m.at(3, j) = col.z;
  }
  return m;
}

// Matrix of right multiplication x -> x s.
inline ExactMatrix right_multiplication_matrix(const Quaternion& s) {
  ExactMatrix m(4);
  const Quaternion units[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (int j = 0; j < 4; ++j) {
    Quaternion col = units[j] * s;
    m.at(0, j) = col.w;
    m.at(1, j) = col.x;
    m.at(2, j) = col.y;
    m.at(3, j) = col.z;
  }
  return m;
}

}  // namespace quandles
