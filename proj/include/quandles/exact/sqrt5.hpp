#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "quandles/exact/rational.hpp"

namespace quandles {

// Element a + b*sqrt(5) of the real quadratic field Q(sqrt5).
// Hosts the golden ratio phi = (1 + sqrt5)/2 with phi^2 = phi + 1.
class Sqrt5 {
 public:
  Sqrt5() = default;
  Sqrt5(Rational a) : a_(std::move(a)) {}  // NOLINT: rationals embed
  Sqrt5(long long a) : a_(a) {}            // NOLINT
  Sqrt5(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Sqrt5 sqrt5() { return Sqrt5(0, 1); }
  static Sqrt5 phi() { return Sqrt5(rat(1, 2), rat(1, 2)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  friend Sqrt5 operator+(const Sqrt5& x, const Sqrt5& y) {
    return Sqrt5(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend Sqrt5 operator-(const Sqrt5& x, const Sqrt5& y) {
    return Sqrt5(x.a_ - y.a_, x.b_ - y.b_);
  }
  friend Sqrt5 operator-(const Sqrt5& x) { return Sqrt5(-x.a_, -x.b_); }
  friend Sqrt5 operator*(const Sqrt5& x, const Sqrt5& y) {
    return Sqrt5(x.a_ * y.a_ + 5 * (x.b_ * y.b_), x.a_ * y.b_ + x.b_ * y.a_);
  }

  // Galois conjugate a - b*sqrt5.
  Sqrt5 conjugate() const { return Sqrt5(a_, -b_); }

  // Field norm a^2 - 5 b^2 (rational, zero iff the element is zero).
  Rational norm() const { return a_ * a_ - 5 * (b_ * b_); }

  Sqrt5 inverse() const {
    Rational n = norm();
    if (n == 0) throw DivisionByZero{};
    return Sqrt5(a_ / n, -b_ / n);
  }

  friend Sqrt5 operator/(const Sqrt5& x, const Sqrt5& y) {
    return x * y.inverse();
  }

  Sqrt5& operator+=(const Sqrt5& y) { return *this = *this + y; }
  Sqrt5& operator-=(const Sqrt5& y) { return *this = *this - y; }
  Sqrt5& operator*=(const Sqrt5& y) { return *this = *this * y; }

  friend bool operator==(const Sqrt5& x, const Sqrt5& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Sqrt5& x, const Sqrt5& y) { return !(x == y); }

  // Exact sign: when a and b disagree in sign, decided by comparing
  // a^2 against 5 b^2 (sqrt5 is irrational, so ties force a = b = 0).
  int sgn() const {
    int sa = sign(a_), sb = sign(b_);
    if (sa == 0 && sb == 0) return 0;
    if (sa >= 0 && sb >= 0) return 1;
    if (sa <= 0 && sb <= 0) return -1;
    Rational lhs = a_ * a_, rhs = 5 * (b_ * b_);
    if (sa > 0) return lhs > rhs ? 1 : -1;
    return lhs > rhs ? -1 : 1;
  }

  friend bool operator<(const Sqrt5& x, const Sqrt5& y) {
    return (x - y).sgn() < 0;
  }
  friend bool operator>(const Sqrt5& x, const Sqrt5& y) { return y < x; }
  friend bool operator<=(const Sqrt5& x, const Sqrt5& y) { return !(y < x); }
  friend bool operator>=(const Sqrt5& x, const Sqrt5& y) { return !(x < y); }

  std::string str() const {
    if (b_ == 0) return to_string(a_);
    std::string s = "(" + to_string(a_);
    s += sign(b_) < 0 ? "-" : "+";
    Rational ab = abs(b_);
    if (ab != 1) s += to_string(ab) + "*";
    s += "sqrt5)";
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Sqrt5& x) {
    return os << x.str();
  }

 private:
  Rational a_, b_;
};

}  // namespace quandles
