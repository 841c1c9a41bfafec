#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace quandles {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Quandle term: a generator, or a binary node t1 * t2 / t1 *bar t2.
struct Term {
  enum class Kind { Generator, Op, OpBar };
  Kind kind;
  int gen = -1;
  TermPtr lhs, rhs;
};

inline TermPtr term_gen(int g) {
  return std::make_shared<Term>(Term{Term::Kind::Generator, g, nullptr, nullptr});
}
inline TermPtr term_op(TermPtr l, TermPtr r) {
  return std::make_shared<Term>(Term{Term::Kind::Op, -1, std::move(l), std::move(r)});
}
inline TermPtr term_opbar(TermPtr l, TermPtr r) {
  return std::make_shared<Term>(Term{Term::Kind::OpBar, -1, std::move(l), std::move(r)});
}

// n-fold iterated operation x *^n y (or /^n with bar).
inline TermPtr term_op_pow(TermPtr l, const TermPtr& r, int n, bool bar = false) {
  if (n < 0) throw std::invalid_argument("negative iteration count");
  for (int i = 0; i < n; ++i) l = bar ? term_opbar(l, r) : term_op(l, r);
  return l;
}

inline bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  if (a->kind == Term::Kind::Generator) return a->gen == b->gen;
  return term_equal(a->lhs, b->lhs) && term_equal(a->rhs, b->rhs);
}

inline void term_generators(const TermPtr& t, std::vector<int>& out) {
  if (t->kind == Term::Kind::Generator) {
    out.push_back(t->gen);
    return;
  }
  term_generators(t->lhs, out);
  term_generators(t->rhs, out);
}

inline std::string term_str(const TermPtr& t,
                            const std::vector<std::string>& names) {
  if (t->kind == Term::Kind::Generator) return names[t->gen];
  std::string l = t->lhs->kind == Term::Kind::Generator
                      ? term_str(t->lhs, names)
                      : "(" + term_str(t->lhs, names) + ")";
  std::string r = t->rhs->kind == Term::Kind::Generator
                      ? term_str(t->rhs, names)
                      : "(" + term_str(t->rhs, names) + ")";
  return l + (t->kind == Term::Kind::Op ? "*" : "/") + r;
}

}  // namespace quandles
