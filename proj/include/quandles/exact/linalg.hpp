#pragma once

#include <array>
#include <initializer_list>
#include <ostream>
#include <stdexcept>

#include "quandles/exact/sqrt5.hpp"

namespace quandles {

struct DimensionMismatch : std::invalid_argument {
  DimensionMismatch() : std::invalid_argument("dimension mismatch") {}
};

// Exact vector of dimension 3 or 4 over Q(sqrt5).
class ExactVector {
 public:
  ExactVector() : dim_(3) {}
  explicit ExactVector(int dim) : dim_(dim) { check_dim(dim); }
  ExactVector(std::initializer_list<Sqrt5> xs) : dim_((int)xs.size()) {
    check_dim(dim_);
    int i = 0;
    for (const auto& x : xs) v_[i++] = x;
  }

  static ExactVector unit(int dim, int axis) {
    ExactVector e(dim);
    e[axis] = 1;
    return e;
  }

  int dim() const { return dim_; }
  Sqrt5& operator[](int i) { return v_[i]; }
  const Sqrt5& operator[](int i) const { return v_[i]; }

  friend ExactVector operator+(const ExactVector& x, const ExactVector& y) {
    same_dim(x, y);
    ExactVector r(x.dim_);
    for (int i = 0; i < x.dim_; ++i) r[i] = x[i] + y[i];
    return r;
  }
  friend ExactVector operator-(const ExactVector& x, const ExactVector& y) {
    same_dim(x, y);
    ExactVector r(x.dim_);
    for (int i = 0; i < x.dim_; ++i) r[i] = x[i] - y[i];
    return r;
  }
  friend ExactVector operator-(const ExactVector& x) {
    ExactVector r(x.dim_);
    for (int i = 0; i < x.dim_; ++i) r[i] = -x[i];
    return r;
  }
  friend ExactVector operator*(const Sqrt5& s, const ExactVector& x) {
    ExactVector r(x.dim_);
    for (int i = 0; i < x.dim_; ++i) r[i] = s * x[i];
    return r;
  }

  friend Sqrt5 dot(const ExactVector& x, const ExactVector& y) {
    same_dim(x, y);
    Sqrt5 s;
    for (int i = 0; i < x.dim_; ++i) s += x[i] * y[i];
    return s;
  }
  Sqrt5 norm_squared() const { return dot(*this, *this); }

  friend Sqrt5 distance_squared(const ExactVector& x, const ExactVector& y) {
    return (x - y).norm_squared();
  }

  friend bool operator==(const ExactVector& x, const ExactVector& y) {
    if (x.dim_ != y.dim_) return false;
    for (int i = 0; i < x.dim_; ++i)
      if (x[i] != y[i]) return false;
    return true;
  }
  friend bool operator!=(const ExactVector& x, const ExactVector& y) {
    return !(x == y);
  }

  // Lexicographic by exact order; used only to fix vertex numbering.
  friend bool operator<(const ExactVector& x, const ExactVector& y) {
    same_dim(x, y);
    for (int i = 0; i < x.dim_; ++i) {
      int s = (x[i] - y[i]).sgn();
      if (s != 0) return s < 0;
    }
    return false;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactVector& x) {
    os << "(";
    for (int i = 0; i < x.dim_; ++i) os << (i ? ", " : "") << x[i];
    return os << ")";
  }

 private:
  static void check_dim(int d) {
    if (d != 3 && d != 4) throw DimensionMismatch{};
  }
  static void same_dim(const ExactVector& x, const ExactVector& y) {
    if (x.dim_ != y.dim_) throw DimensionMismatch{};
  }
  int dim_;
  std::array<Sqrt5, 4> v_;
};

// Exact square matrix of dimension 3 or 4 over Q(sqrt5).
class ExactMatrix {
 public:
  ExactMatrix() : dim_(3) {}
  explicit ExactMatrix(int dim) : dim_(dim) {
    if (dim != 3 && dim != 4) throw DimensionMismatch{};
  }

  static ExactMatrix identity(int dim) {
    ExactMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }

  int dim() const { return dim_; }
  Sqrt5& at(int i, int j) { return e_[i][j]; }
  const Sqrt5& at(int i, int j) const { return e_[i][j]; }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch{};
    ExactMatrix r(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
      for (int j = 0; j < a.dim_; ++j) {
        Sqrt5 s;
        for (int k = 0; k < a.dim_; ++k) s += a.at(i, k) * b.at(k, j);
        r.at(i, j) = s;
      }
    return r;
  }

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch{};
    ExactMatrix r(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
      for (int j = 0; j < a.dim_; ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
  }

  friend ExactMatrix operator*(const Sqrt5& s, const ExactMatrix& a) {
    ExactMatrix r(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
      for (int j = 0; j < a.dim_; ++j) r.at(i, j) = s * a.at(i, j);
    return r;
  }

  ExactMatrix transpose() const {
    ExactMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) r.at(i, j) = at(j, i);
    return r;
  }

  friend ExactVector operator*(const ExactMatrix& m, const ExactVector& v) {
    if (m.dim_ != v.dim()) throw DimensionMismatch{};
    ExactVector r(m.dim_);
    for (int i = 0; i < m.dim_; ++i) {
      Sqrt5 s;
      for (int j = 0; j < m.dim_; ++j) s += m.at(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  Sqrt5 determinant() const {
    if (dim_ == 3) {
      return e_[0][0] * (e_[1][1] * e_[2][2] - e_[1][2] * e_[2][1]) -
             e_[0][1] * (e_[1][0] * e_[2][2] - e_[1][2] * e_[2][0]) +
             e_[0][2] * (e_[1][0] * e_[2][1] - e_[1][1] * e_[2][0]);
    }
    // Laplace expansion along the first row.
    Sqrt5 det;
    for (int j = 0; j < 4; ++j) {
      ExactMatrix minor(3);
      for (int r = 1; r < 4; ++r) {
        int cc = 0;
        for (int c = 0; c < 4; ++c) {
          if (c == j) continue;
          minor.at(r - 1, cc++) = e_[r][c];
        }
      }
      Sqrt5 term = e_[0][j] * minor.determinant();
      det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
  }

  bool is_orthogonal() const {
    return transpose() * (*this) == identity(dim_);
  }
  bool is_special_orthogonal() const {
    return is_orthogonal() && determinant() == Sqrt5(1);
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim_ != b.dim_) return false;
    for (int i = 0; i < a.dim_; ++i)
      for (int j = 0; j < a.dim_; ++j)
        if (a.at(i, j) != b.at(i, j)) return false;
    return true;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) {
    return !(a == b);
  }

 private:
  int dim_;
  std::array<std::array<Sqrt5, 4>, 4> e_;
};

}  // namespace quandles
