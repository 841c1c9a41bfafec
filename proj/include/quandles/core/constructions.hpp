#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "quandles/core/finite_quandle.hpp"

namespace quandles {

// Dihedral quandle R_n on {0..n-1} with x * y = 2y - x (mod n).
inline FiniteQuandle dihedral_quandle(int n) {
  if (n < 1) throw std::invalid_argument("dihedral quandle needs n >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) {
    labels[x] = std::to_string(x);
    for (int y = 0; y < n; ++y) t[x][y] = ((2 * y - x) % n + n) % n;
  }
  return FiniteQuandle(std::move(labels), std::move(t));
}

// Trivial quandle: x * y = x.
inline FiniteQuandle trivial_quandle(int n) {
  if (n < 1) throw std::invalid_argument("trivial quandle needs n >= 1");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = x;
  return FiniteQuandle::from_table(std::move(t));
}

// Finite group given by its multiplication table.
class FiniteGroup {
 public:
  explicit FiniteGroup(std::vector<std::vector<int>> mul)
      : mul_(std::move(mul)) {
    const int n = (int)mul_.size();
    if (n == 0) throw std::invalid_argument("empty group table");
    for (const auto& row : mul_)
      if ((int)row.size() != n)
        throw std::invalid_argument("group table is not square");
    identity_ = -1;
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        ok = mul_[e][x] == x && mul_[x][e] == x;
      if (ok) {
        identity_ = e;
        break;
      }
    }
    if (identity_ < 0) throw std::invalid_argument("group has no identity");
    inv_.assign(n, -1);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y)
        if (mul_[x][y] == identity_ && mul_[y][x] == identity_) inv_[x] = y;
      if (inv_[x] < 0) throw std::invalid_argument("group element not invertible");
    }
  }

  static FiniteGroup cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) t[x][y] = (x + y) % n;
    return FiniteGroup(std::move(t));
  }

  static FiniteGroup direct_product(const FiniteGroup& g,
                                    const FiniteGroup& h) {
    int n = g.order(), m = h.order();
    std::vector<std::vector<int>> t(n * m, std::vector<int>(n * m));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < m; ++d)
            t[a * m + b][c * m + d] = g.mul(a, c) * m + h.mul(b, d);
    return FiniteGroup(std::move(t));
  }

  int order() const { return (int)mul_.size(); }
  int mul(int x, int y) const { return mul_[x][y]; }
  int inverse(int x) const { return inv_[x]; }
  int identity() const { return identity_; }

  bool is_automorphism(const std::vector<int>& phi) const {
    const int n = order();
    if ((int)phi.size() != n) return false;
    std::vector<char> seen(n, 0);
    for (int x : phi) {
      if (x < 0 || x >= n || seen[x]) return false;
      seen[x] = 1;
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (phi[mul_[x][y]] != mul_[phi[x]][phi[y]]) return false;
    return true;
  }

 private:
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  int identity_;
};

// Generalized Alexander quandle on a group G with automorphism phi:
// x * y = phi(x y^-1) y.
inline FiniteQuandle generalized_alexander(const FiniteGroup& g,
                                           const std::vector<int>& phi) {
  if (!g.is_automorphism(phi))
    throw std::invalid_argument("phi is not a group automorphism");
  const int n = g.order();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x][y] = g.mul(phi[g.mul(x, g.inverse(y))], y);
  return FiniteQuandle::from_table(std::move(t));
}

}  // namespace quandles
