#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quandles {

// Result of a quandle-axiom check: pass, or the first failing axiom with
// a witness triple (unused slots are -1).
struct AxiomReport {
  enum class Failure { None, Idempotence, RightInvertibility, Distributivity };
  Failure failure = Failure::None;
  int x = -1, y = -1, z = -1;

  bool pass() const { return failure == Failure::None; }
  std::string describe() const {
    switch (failure) {
      case Failure::None:
        return "pass";
      case Failure::Idempotence:
        return "idempotence fails at x=" + std::to_string(x);
      case Failure::RightInvertibility:
        return "right translation by x=" + std::to_string(x) +
               " is not a permutation";
      default:
        return "self-distributivity fails at (" + std::to_string(x) + "," +
               std::to_string(y) + "," + std::to_string(z) + ")";
    }
  }
};

// Finite quandle as a full operation table.  table[i][j] encodes x_i * x_j
// (row acted on, column acting).  x *bar y is the inverse of the right
// translation *y.
class FiniteQuandle {
 public:
  FiniteQuandle(std::vector<std::string> labels,
                std::vector<std::vector<int>> table,
                std::vector<int> generators = {})
      : labels_(std::move(labels)),
        table_(std::move(table)),
        generators_(std::move(generators)) {
    const int n = (int)table_.size();
    if (n == 0) throw std::invalid_argument("empty operation table");
    if ((int)labels_.size() != n)
      throw std::invalid_argument("label count does not match table order");
    for (const auto& row : table_) {
      if ((int)row.size() != n)
        throw std::invalid_argument("operation table is not square");
      for (int v : row)
        if (v < 0 || v >= n)
          throw std::invalid_argument("table entry out of range");
    }
    for (int g : generators_)
      if (g < 0 || g >= n)
        throw std::invalid_argument("generator index out of range");
    build_inverse_columns();
  }

  static FiniteQuandle from_table(std::vector<std::vector<int>> table,
                                  std::vector<int> generators = {}) {
    std::vector<std::string> labels(table.size());
    for (size_t i = 0; i < labels.size(); ++i)
      labels[i] = "x" + std::to_string(i);
    return FiniteQuandle(std::move(labels), std::move(table),
                         std::move(generators));
  }

  int order() const { return (int)table_.size(); }
  int op(int x, int y) const { return table_[x][y]; }

  // x *bar y, defined whenever column y is a permutation.
  int opbar(int x, int y) const {
    int r = inv_[x][y];
    if (r < 0)
      throw std::logic_error("right translation is not invertible");
    return r;
  }
  bool column_invertible(int y) const {
    for (int x = 0; x < order(); ++x)
      if (inv_[x][y] < 0) return false;
    return true;
  }

  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<int>& generators() const { return generators_; }
  void set_generators(std::vector<int> gens) { generators_ = std::move(gens); }

  AxiomReport check_axioms() const {
    const int n = order();
    for (int x = 0; x < n; ++x)
      if (table_[x][x] != x)
        return {AxiomReport::Failure::Idempotence, x, -1, -1};
    for (int y = 0; y < n; ++y) {
      std::vector<char> seen(n, 0);
      for (int x = 0; x < n; ++x) {
        if (seen[table_[x][y]])
          return {AxiomReport::Failure::RightInvertibility, y, -1, -1};
        seen[table_[x][y]] = 1;
      }
    }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (table_[table_[x][y]][z] != table_[table_[x][z]][table_[y][z]])
            return {AxiomReport::Failure::Distributivity, x, y, z};
    return {};
  }

  bool is_quandle() const { return check_axioms().pass(); }

  // Subquandle closure of a seed set under * and *bar.
  std::vector<int> generated_closure(const std::vector<int>& seed) const {
    std::vector<char> in(order(), 0);
    std::vector<int> out;
    for (int s : seed)
      if (!in[s]) {
        in[s] = 1;
        out.push_back(s);
      }
    for (size_t head = 0; head < out.size(); ++head) {
      for (size_t j = 0; j < out.size(); ++j) {
        int a = out[head], b = out[j];
        for (int c : {op(a, b), op(b, a), opbar(a, b), opbar(b, a)}) {
          if (!in[c]) {
            in[c] = 1;
            out.push_back(c);
          }
        }
      }
    }
    return out;
  }

  bool generated_by(const std::vector<int>& seed) const {
    return (int)generated_closure(seed).size() == order();
  }

  friend bool operator==(const FiniteQuandle& a, const FiniteQuandle& b) {
    return a.table_ == b.table_;
  }

 private:
  void build_inverse_columns() {
    const int n = order();
    inv_.assign(n, std::vector<int>(n, -1));
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) {
        int r = table_[x][y];
        if (inv_[r][y] < 0) inv_[r][y] = x;  // keep first preimage
      }
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> generators_;
  std::vector<std::vector<int>> inv_;  // inv_[z][y] = x with x*y = z
};

}  // namespace quandles
