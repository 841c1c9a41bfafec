#pragma once

#include <ostream>
#include <string>

#include "quandles/exact/rational.hpp"

namespace quandles {

// Element a + b*zeta where zeta is a primitive 6th root of unity,
// so zeta^2 = zeta - 1 and zeta^6 = 1.  The points a + b*zeta form the
// triangular lattice; multiplication by zeta is the exact rotation by
// pi/3 about the origin.
class Eisenstein {
 public:
  Eisenstein() = default;
  Eisenstein(BigInt a) : a_(std::move(a)) {}  // NOLINT
  Eisenstein(long long a) : a_(a) {}          // NOLINT
  Eisenstein(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {}

  static Eisenstein zeta() { return Eisenstein(0, 1); }

  const BigInt& one_part() const { return a_; }
  const BigInt& zeta_part() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  friend Eisenstein operator+(const Eisenstein& x, const Eisenstein& y) {
    return Eisenstein(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend Eisenstein operator-(const Eisenstein& x, const Eisenstein& y) {
    return Eisenstein(x.a_ - y.a_, x.b_ - y.b_);
  }
  friend Eisenstein operator-(const Eisenstein& x) {
    return Eisenstein(-x.a_, -x.b_);
  }
  // (a + b z)(c + d z) = (ac - bd) + (ad + bc + bd) z,  using z^2 = z - 1.
  friend Eisenstein operator*(const Eisenstein& x, const Eisenstein& y) {
    return Eisenstein(x.a_ * y.a_ - x.b_ * y.b_,
                      x.a_ * y.b_ + x.b_ * y.a_ + x.b_ * y.b_);
  }

  Eisenstein& operator+=(const Eisenstein& y) { return *this = *this + y; }
  Eisenstein& operator-=(const Eisenstein& y) { return *this = *this - y; }
  Eisenstein& operator*=(const Eisenstein& y) { return *this = *this * y; }

  // Complex conjugate: conj(zeta) = zeta^5 = 1 - zeta.
  Eisenstein conjugate() const { return Eisenstein(a_ + b_, -b_); }

  // |a + b zeta|^2 = a^2 + ab + b^2.
  BigInt norm() const { return a_ * a_ + a_ * b_ + b_ * b_; }

  friend bool operator==(const Eisenstein& x, const Eisenstein& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Eisenstein& x, const Eisenstein& y) {
    return !(x == y);
  }

  std::string str() const {
    if (b_ == 0) return a_.str();
    std::string s = a_.str();
    s += b_ < 0 ? "-" : "+";
    BigInt ab = abs(b_);
    if (ab != 1) s += ab.str() + "*";
    s += "zeta";
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Eisenstein& x) {
    return os << x.str();
  }

 private:
  BigInt a_, b_;
};

}  // namespace quandles
