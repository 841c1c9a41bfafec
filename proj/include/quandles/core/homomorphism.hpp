#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "quandles/core/finite_quandle.hpp"
#include "quandles/pres/free_quandle.hpp"
#include "quandles/pres/presentation.hpp"

namespace quandles {

// Homomorphism between finite quandles, stored with full tables so a
// witness can be re-checked independently of how it was found.
struct QuandleHom {
  FiniteQuandle source;
  FiniteQuandle target;
  std::vector<int> mapping;

  bool verify() const {
    if ((int)mapping.size() != source.order()) return false;
    for (int v : mapping)
      if (v < 0 || v >= target.order()) return false;
    for (int x = 0; x < source.order(); ++x)
      for (int y = 0; y < source.order(); ++y)
        if (mapping[source.op(x, y)] != target.op(mapping[x], mapping[y]))
          return false;
    return true;
  }

  bool is_surjective() const {
    std::vector<char> hit(target.order(), 0);
    for (int v : mapping) hit[v] = 1;
    for (char h : hit)
      if (!h) return false;
    return true;
  }

  bool is_bijective() const {
    return source.order() == target.order() && is_surjective();
  }
};

// Value of a ground term under a generator assignment.
inline int evaluate_term(const TermPtr& t, const std::vector<int>& assign,
                         const FiniteQuandle& q) {
  if (t->kind == Term::Kind::Generator) {
    if (t->gen >= (int)assign.size() || assign[t->gen] < 0)
      throw std::invalid_argument("unassigned generator in term");
    return assign[t->gen];
  }
  int l = evaluate_term(t->lhs, assign, q);
  int r = evaluate_term(t->rhs, assign, q);
  return t->kind == Term::Kind::Op ? q.op(l, r) : q.opbar(l, r);
}

// Value of a free-quandle element g^-1 s g: start at the image of s and
// apply the translations named by the conjugator left to right.
inline int evaluate_word(const FreeQuandleElement& w,
                         const std::vector<int>& assign,
                         const FiniteQuandle& q) {
  if (w.base() >= (int)assign.size() || assign[w.base()] < 0)
    throw std::invalid_argument("unassigned generator in word");
  int x = assign[w.base()];
  for (int letter : w.conjugator()) {
    int g = letter_generator(letter);
    if (g >= (int)assign.size() || assign[g] < 0)
      throw std::invalid_argument("unassigned generator in word");
    x = letter >= 0 ? q.op(x, assign[g]) : q.opbar(x, assign[g]);
  }
  return x;
}

// Outcome of testing whether a generator assignment induces a homomorphism
// from the presented quandle.
struct InducedHomResult {
  bool ok = false;
  int failing_relation = -1;  // index into the presentation's relations
  int lhs_value = -1, rhs_value = -1;
  std::vector<int> generator_images;
  bool surjective = false;
};

inline InducedHomResult check_induced_hom(const Presentation& p,
                                          const std::vector<int>& assign,
                                          const FiniteQuandle& q) {
  InducedHomResult res;
  res.generator_images = assign;
  for (size_t i = 0; i < p.relations.size(); ++i) {
    int l = evaluate_term(p.relations[i].first, assign, q);
    int r = evaluate_term(p.relations[i].second, assign, q);
    if (l != r) {
      res.failing_relation = (int)i;
      res.lhs_value = l;
      res.rhs_value = r;
      return res;
    }
  }
  res.ok = true;
  res.surjective = q.generated_by(assign);
  return res;
}

}  // namespace quandles
