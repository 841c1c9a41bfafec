#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "quandles/core/homomorphism.hpp"
#include "quandles/core/isomorphism.hpp"
#include "quandles/twist/twist_spun.hpp"

namespace quandles {

// Fiber-preserving permutation commuting with every right translation:
// alpha(x * y) = alpha(x) * y.  These realize the left action of the deck
// group A on the covering quandle.
struct DeckTransformation {
  std::vector<int> perm;

  int apply(int x) const { return perm[x]; }

  bool commutes_with_translations(const FiniteQuandle& q) const {
    for (int x = 0; x < q.order(); ++x)
      for (int y = 0; y < q.order(); ++y)
        if (perm[q.op(x, y)] != q.op(perm[x], y)) return false;
    return true;
  }
  bool preserves_fibers(const QuandleHom& p) const {
    for (int x = 0; x < (int)perm.size(); ++x)
      if (p.mapping[perm[x]] != p.mapping[x]) return false;
    return true;
  }
};

struct DeckGroup {
  std::vector<DeckTransformation> elements;  // includes the identity
  bool abelian = false;
  bool cyclic = false;

  int order() const { return (int)elements.size(); }
};

namespace detail {

inline int element_order(const std::vector<int>& perm) {
  std::vector<int> cur(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) cur[i] = (int)i;
  for (int k = 1;; ++k) {
    std::vector<int> nxt(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) nxt[i] = perm[cur[i]];
    cur = nxt;
    bool ident = true;
    for (size_t i = 0; i < perm.size() && ident; ++i)
      ident = cur[i] == (int)i;
    if (ident) return k;
  }
}

}  // namespace detail

// All deck transformations of p.  Since the source is connected, a
// transformation is determined by its value at one base element: each
// candidate value in the base fiber is propagated through the right
// translations and kept only if globally consistent.
inline DeckGroup deck_group(const FiniteQuandle& q, const QuandleHom& p) {
  const int n = q.order();
  DeckGroup out;
  std::vector<int> base_fiber;
  for (int x = 0; x < n; ++x)
    if (p.mapping[x] == p.mapping[0]) base_fiber.push_back(x);

  for (int target : base_fiber) {
    std::vector<int> alpha(n, -1);
    alpha[0] = target;
    std::vector<int> known{0};
    bool ok = true;
    for (size_t head = 0; head < known.size() && ok; ++head) {
      int x = known[head];
      for (int y = 0; y < n && ok; ++y) {
        const int derived[2] = {q.op(x, y), q.opbar(x, y)};
        const int images[2] = {q.op(alpha[x], y), q.opbar(alpha[x], y)};
        for (int t = 0; t < 2; ++t) {
          if (alpha[derived[t]] < 0) {
            alpha[derived[t]] = images[t];
            known.push_back(derived[t]);
          } else if (alpha[derived[t]] != images[t]) {
            ok = false;
            break;
          }
        }
      }
    }
    if (!ok) continue;
    for (int v : alpha)
      if (v < 0) ok = false;  // not connected; cannot happen for Q_m
    if (!ok) continue;
    DeckTransformation d{std::move(alpha)};
    std::vector<char> hit(n, 0);
    for (int v : d.perm) {
      if (hit[v]) {
        ok = false;
        break;
      }
      hit[v] = 1;
    }
    if (ok && d.commutes_with_translations(q) && d.preserves_fibers(p))
      out.elements.push_back(std::move(d));
  }

  out.abelian = true;
  for (const auto& d1 : out.elements)
    for (const auto& d2 : out.elements) {
      for (int x = 0; x < n; ++x)
        if (d1.perm[d2.perm[x]] != d2.perm[d1.perm[x]]) {
          out.abelian = false;
          break;
        }
      if (!out.abelian) break;
    }
  out.cyclic = false;
  for (const auto& d : out.elements)
    if (detail::element_order(d.perm) == out.order()) {
      out.cyclic = true;
      break;
    }
  return out;
}

// Verdicts for the central-extension conditions, with a counterexample
// triple on failure.
struct ConditionVerdict {
  bool holds = true;
  std::vector<int> counterexample;  // semantics depend on the condition
};

struct ExtensionReport {
  QuandleHom projection;
  DeckGroup deck;
  ConditionVerdict e0, e1, e2;
  bool deck_nontrivial = false;
  bool is_central_extension = false;

  std::string verdict_text() const {
    if (is_central_extension) return "central extension";
    if (!e0.holds) return "not a central extension: (E0) fails";
    if (!e1.holds) return "not a central extension: (E1) fails";
    if (!e2.holds) return "not a central extension: (E2) fails";
    return "not a central extension: trivial deck group";
  }
};

// Exhaustive check of (E0), (E1), (E2) for p with A the deck group.
inline ExtensionReport verify_central_extension(const FiniteQuandle& q,
                                                const QuandleHom& p,
                                                const DeckGroup& a) {
  const int n = q.order();
  ExtensionReport rep{p, a, {}, {}, {}, false, false};

  // (E0): p(x) = p(y) implies w*x = w*y, for every w
  for (int x = 0; x < n && rep.e0.holds; ++x)
    for (int y = 0; y < n && rep.e0.holds; ++y) {
      if (p.mapping[x] != p.mapping[y]) continue;
      for (int w = 0; w < n; ++w)
        if (q.op(w, x) != q.op(w, y)) {
          rep.e0 = {false, {w, x, y}};
          break;
        }
    }

  // (E1): (alpha x) * y = alpha (x * y)  and  x * (alpha y) = x * y
  for (int ai = 0; ai < a.order() && rep.e1.holds; ++ai) {
    const auto& alpha = a.elements[ai].perm;
    for (int x = 0; x < n && rep.e1.holds; ++x)
      for (int y = 0; y < n; ++y) {
        if (q.op(alpha[x], y) != alpha[q.op(x, y)] ||
            q.op(x, alpha[y]) != q.op(x, y)) {
          rep.e1 = {false, {ai, x, y}};
          break;
        }
      }
  }

  // (E2): A acts freely and transitively on every fiber
  std::vector<std::vector<int>> fibers(p.target.order());
  for (int x = 0; x < n; ++x) fibers[p.mapping[x]].push_back(x);
  for (int f = 0; f < (int)fibers.size() && rep.e2.holds; ++f) {
    const auto& fiber = fibers[f];
    if ((int)fiber.size() != a.order()) {
      rep.e2 = {false, {f}};
      break;
    }
    for (int x : fiber) {
      std::vector<char> hit(n, 0);
      bool free_transitive = true;
      for (const auto& d : a.elements) {
        int y = d.perm[x];
        if (hit[y] || p.mapping[y] != f) {
          free_transitive = false;
          break;
        }
        hit[y] = 1;
      }
      int covered = 0;
      for (int y : fiber) covered += hit[y];
      if (!free_transitive || covered != (int)fiber.size()) {
        rep.e2 = {false, {f, x}};
        break;
      }
    }
  }

  rep.deck_nontrivial = a.order() > 1;
  rep.is_central_extension =
      rep.e0.holds && rep.e1.holds && rep.e2.holds && rep.deck_nontrivial;
  return rep;
}

// Enumerates Q_m's presentation augmented with (((a*c)*a)*a)*c = a, which
// quotients out the deck action; the result must be the {3,m} quandle.
struct CollapseReport {
  int m = 0;
  EnumerationResult augmented;
  int schlafli_order = 0;
  bool isomorphic = false;
};

inline CollapseReport collapse_relation_check(int m, long budget = 20000) {
  if (m < 2 || m > 5)
    throw std::invalid_argument("collapse check needs 2 <= m <= 5");
  Presentation p = twist_spun_presentation(m);
  TermPtr a = term_gen(0), c = term_gen(1);
  p.relations.emplace_back(
      term_op(term_op(term_op(term_op(a, c), a), a), c), a);
  CollapseReport rep;
  rep.m = m;
  rep.augmented = enumerate_presentation(p, budget);
  FiniteQuandle x = schlafli_3m_quandle(m);
  rep.schlafli_order = x.order();
  if (rep.augmented.finite())
    rep.isomorphic = find_isomorphism(*rep.augmented.quandle, x).has_value();
  return rep;
}

// Certificate that Q_6 is infinite: the Q_6 relations hold at the pair
// (0, 1) of the {3,6} Eisenstein quandle, so Q_6 maps onto the subquandle
// generated by {0, 1}; the inner mapping (*1)^3 (*0)^3 is a nonzero pure
// translation, so that subquandle is infinite.
struct InfinityCertificate {
  bool relations_hold = false;
  TranslationCertificate translation;
  bool valid = false;
};

inline InfinityCertificate certify_Q6_infinite() {
  InfinityCertificate cert;
  using EQ = EisensteinQuandle;
  Eisenstein v = EQ::designated_v(), w = EQ::designated_w();
  bool rel1 = EQ::op(EQ::op(v, w), v) == w;
  Eisenstein cur = w;
  for (int k = 0; k < 6; ++k) cur = EQ::op(cur, v);
  bool rel2 = cur == w;
  cert.relations_hold = rel1 && rel2;
  cert.translation = translation_certificate(v, w);
  cert.valid = cert.relations_hold && cert.translation.valid;
  return cert;
}

}  // namespace quandles
