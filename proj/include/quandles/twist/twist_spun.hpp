#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "quandles/core/homomorphism.hpp"
#include "quandles/core/inner.hpp"
#include "quandles/geom/eisenstein_quandle.hpp"
#include "quandles/geom/schlafli.hpp"
#include "quandles/pres/enumerator.hpp"
#include "quandles/pres/presentation.hpp"

namespace quandles {

// Knot quandle of the m-twist-spun trefoil, realized by enumerating
// < a, c | (a*c)*a = c, c *^m a = c >.  Finite for m <= 5.
struct TwistSpunQuandle {
  int m = 0;
  EnumerationResult realization;

  bool finite() const { return realization.finite(); }
  const FiniteQuandle& quandle() const {
    if (!finite()) throw std::logic_error("realization is not finite");
    return *realization.quandle;
  }
  int a_index() const { return realization.generator_images.at(0); }
  int c_index() const { return realization.generator_images.at(1); }
};

inline TwistSpunQuandle build_Qm(int m, long budget = 20000) {
  TwistSpunQuandle q;
  q.m = m;
  q.realization = enumerate_presentation(twist_spun_presentation(m), budget);
  return q;
}

// The epimorphism p : Q_m -> X sending a, c to the designated pair of the
// {3,m} quandle, extended over all of Q_m by generated closure.
inline QuandleHom projection_to_schlafli(const TwistSpunQuandle& q,
                                         const FiniteQuandle& x) {
  if (x.generators().size() < 2)
    throw std::invalid_argument("target has no designated generator pair");
  const FiniteQuandle& src = q.quandle();
  int v = x.generators()[0], w = x.generators()[1];
  {
    // the target pair must satisfy the q-relations, else x was mis-built
    std::vector<int> assign{v, w};
    auto res = check_induced_hom(twist_spun_presentation(q.m), assign, x);
    if (!res.ok)
      throw std::invalid_argument(
          "designated pair violates relation " +
          std::to_string(res.failing_relation) + " of the presentation");
  }
  std::vector<int> mapping(src.order(), -1);
  mapping[q.a_index()] = v;
  mapping[q.c_index()] = w;
  std::vector<int> known{q.a_index(), q.c_index()};
  for (size_t head = 0; head < known.size(); ++head) {
    for (size_t j = 0; j < known.size(); ++j) {
      int a = known[head], b = known[j];
      const int derived[4] = {src.op(a, b), src.op(b, a), src.opbar(a, b),
                              src.opbar(b, a)};
      const int images[4] = {x.op(mapping[a], mapping[b]),
                             x.op(mapping[b], mapping[a]),
                             x.opbar(mapping[a], mapping[b]),
                             x.opbar(mapping[b], mapping[a])};
      for (int t = 0; t < 4; ++t) {
        if (mapping[derived[t]] < 0) {
          mapping[derived[t]] = images[t];
          known.push_back(derived[t]);
        } else if (mapping[derived[t]] != images[t]) {
          throw std::logic_error("projection extension hit a conflict");
        }
      }
    }
  }
  for (int val : mapping)
    if (val < 0) throw std::logic_error("generators do not generate Q_m");
  QuandleHom hom{src, x, std::move(mapping)};
  if (!hom.verify() || !hom.is_surjective())
    throw std::logic_error("projection is not a surjective homomorphism");
  return hom;
}

// The inner automorphism g-hat at g = identity:
// (*c) then (*a) then (*a) then (*c), i.e. x -> (((x*c)*a)*a)*c.
// Its orbit through a realizes the action of the deck generator.
inline InnerPermutation hat_automorphism(const TwistSpunQuandle& q) {
  const FiniteQuandle& t = q.quandle();
  int a = q.a_index(), c = q.c_index();
  InnerPermutation p = InnerPermutation::translation(t, c)
                           .then(InnerPermutation::translation(t, a))
                           .then(InnerPermutation::translation(t, a))
                           .then(InnerPermutation::translation(t, c));
  return p;
}

inline std::vector<int> orbit_of(const std::vector<int>& perm, int start) {
  std::vector<int> orbit{start};
  for (int cur = perm[start]; cur != start; cur = perm[cur])
    orbit.push_back(cur);
  return orbit;
}

}  // namespace quandles
