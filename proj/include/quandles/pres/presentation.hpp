#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quandles/pres/term.hpp"

namespace quandles {

// Finite quandle presentation <S | R>: named generators and relations
// given as pairs of ground terms.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::pair<TermPtr, TermPtr>> relations;

  int generator_index(const std::string& name) const {
    auto it = std::find(generators.begin(), generators.end(), name);
    return it == generators.end() ? -1 : (int)(it - generators.begin());
  }

  void validate() const {
    for (size_t i = 0; i < generators.size(); ++i)
      for (size_t j = i + 1; j < generators.size(); ++j)
        if (generators[i] == generators[j])
          throw std::invalid_argument("duplicate generator " + generators[i]);
    std::vector<int> used;
    for (const auto& [lhs, rhs] : relations) {
      term_generators(lhs, used);
      term_generators(rhs, used);
    }
    for (int g : used)
      if (g < 0 || g >= (int)generators.size())
        throw std::invalid_argument("relation references unknown generator");
  }

  std::string str() const {
    std::string s = "< ";
    for (size_t i = 0; i < generators.size(); ++i)
      s += (i ? ", " : "") + generators[i];
    s += " | ";
    for (size_t i = 0; i < relations.size(); ++i) {
      if (i) s += ", ";
      s += term_str(relations[i].first, generators) + " = " +
           term_str(relations[i].second, generators);
    }
    return s + " >";
  }
};

// Presentation of the knot quandle of the m-twist-spun trefoil:
// < a, c | (a*c)*a = c, c *^m a = c >.
inline Presentation twist_spun_presentation(int m) {
  if (m < 1) throw std::invalid_argument("twist-spun presentation needs m >= 1");
  Presentation p;
  p.generators = {"a", "c"};
  TermPtr a = term_gen(0), c = term_gen(1);
  p.relations.emplace_back(term_op(term_op(a, c), a), c);
  p.relations.emplace_back(term_op_pow(c, a, m), c);
  return p;
}

// The two presentations of the {3,m} quandle: the former
// < v, w | (v*w)*v = w, (w*v)*w = v, w *^m v = w >
// and the latter, with the middle relation replaced by
// (((v*w)*v)*v)*w = v.
inline Presentation schlafli_presentation(int m, bool latter = false) {
  if (m < 2) throw std::invalid_argument("Schlafli presentation needs m >= 2");
  Presentation p;
  p.generators = {"v", "w"};
  TermPtr v = term_gen(0), w = term_gen(1);
  p.relations.emplace_back(term_op(term_op(v, w), v), w);
  if (latter)
    p.relations.emplace_back(
        term_op(term_op(term_op(term_op(v, w), v), v), w), v);
  else
    p.relations.emplace_back(term_op(term_op(w, v), w), v);
  p.relations.emplace_back(term_op_pow(w, v, m), w);
  return p;
}

}  // namespace quandles
