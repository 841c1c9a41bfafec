#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "quandles/core/homomorphism.hpp"

namespace quandles {

namespace detail {

// Per-element invariant: cycle type of the right translation *x, image
// profile of the left map y -> x*y, and fixed-point counts.  Isomorphisms
// preserve it, which prunes the backtracking search.
struct ElementProfile {
  std::vector<int> right_cycle_type;
  int left_image_size = 0;
  int left_fixed = 0;
  int right_fixed = 0;

  friend bool operator==(const ElementProfile&,
                         const ElementProfile&) = default;
  friend bool operator<(const ElementProfile& a, const ElementProfile& b) {
    if (a.right_cycle_type != b.right_cycle_type)
      return a.right_cycle_type < b.right_cycle_type;
    if (a.left_image_size != b.left_image_size)
      return a.left_image_size < b.left_image_size;
    if (a.left_fixed != b.left_fixed) return a.left_fixed < b.left_fixed;
    return a.right_fixed < b.right_fixed;
  }
};

inline ElementProfile element_profile(const FiniteQuandle& q, int x) {
  const int n = q.order();
  ElementProfile p;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int len = 0, cur = s;
    while (!seen[cur]) {
      seen[cur] = 1;
      cur = q.op(cur, x);
      ++len;
    }
    p.right_cycle_type.push_back(len);
  }
  std::sort(p.right_cycle_type.begin(), p.right_cycle_type.end());
  std::vector<char> img(n, 0);
  for (int y = 0; y < n; ++y) {
    img[q.op(x, y)] = 1;
    if (q.op(x, y) == x) ++p.left_fixed;
    if (q.op(y, x) == y) ++p.right_fixed;
  }
  for (int y = 0; y < n; ++y) p.left_image_size += img[y];
  return p;
}

// Greedy generating sequence: designated generators first (when they
// generate), then repeatedly the smallest element outside the closure.
inline std::vector<int> generating_sequence(const FiniteQuandle& q) {
  std::vector<int> gens = q.generators();
  if (!gens.empty() && q.generated_by(gens)) return gens;
  while (true) {
    auto closure = gens.empty() ? std::vector<int>{} : q.generated_closure(gens);
    if ((int)closure.size() == q.order()) break;
    std::vector<char> in(q.order(), 0);
    for (int c : closure) in[c] = 1;
    int next = 0;
    while (in[next]) ++next;
    gens.push_back(next);
  }
  return gens;
}

// Extends the partial map given by images of gens[0..k) through the
// subquandle they generate.  Returns false on conflict or non-injectivity.
inline bool closure_extend(const FiniteQuandle& q1, const FiniteQuandle& q2,
                           const std::vector<int>& gens,
                           const std::vector<int>& images, size_t k,
                           std::vector<int>& mapping) {
  const int n = q1.order();
  mapping.assign(n, -1);
  std::vector<int> known;
  std::vector<char> used(q2.order(), 0);
  for (size_t i = 0; i < k; ++i) {
    int g = gens[i], im = images[i];
    if (mapping[g] >= 0) {
      if (mapping[g] != im) return false;
      continue;
    }
    if (used[im]) return false;
    mapping[g] = im;
    used[im] = 1;
    known.push_back(g);
  }
  auto deduce = [&](int c, int vc) -> bool {
    if (mapping[c] < 0) {
      if (used[vc]) return false;
      mapping[c] = vc;
      used[vc] = 1;
      known.push_back(c);
      return true;
    }
    return mapping[c] == vc;
  };
  for (size_t head = 0; head < known.size(); ++head) {
    for (size_t j = 0; j <= head; ++j) {
      int a = known[head], b = known[j];
      if (!deduce(q1.op(a, b), q2.op(mapping[a], mapping[b]))) return false;
      if (!deduce(q1.op(b, a), q2.op(mapping[b], mapping[a]))) return false;
      if (!deduce(q1.opbar(a, b), q2.opbar(mapping[a], mapping[b])))
        return false;
      if (!deduce(q1.opbar(b, a), q2.opbar(mapping[b], mapping[a])))
        return false;
    }
  }
  return true;
}

}  // namespace detail

// Searches for an isomorphism Q1 -> Q2.  Generator images are chosen by
// backtracking (in increasing order, so the witness is deterministic and
// lexicographically smallest); everything else is forced by closure.
inline std::optional<QuandleHom> find_isomorphism(const FiniteQuandle& q1,
                                                  const FiniteQuandle& q2) {
  const int n = q1.order();
  if (n != q2.order()) return std::nullopt;

  std::vector<detail::ElementProfile> p1(n), p2(n);
  for (int x = 0; x < n; ++x) {
    p1[x] = detail::element_profile(q1, x);
    p2[x] = detail::element_profile(q2, x);
  }
  {
    auto s1 = p1, s2 = p2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }

  std::vector<int> gens = detail::generating_sequence(q1);
  std::vector<int> images(gens.size(), -1), mapping, scratch;

  auto rec = [&](auto&& self, size_t k) -> bool {
    if (k == gens.size()) {
      if (!detail::closure_extend(q1, q2, gens, images, k, mapping))
        return false;
      for (int v : mapping)
        if (v < 0) return false;
      return true;
    }
    for (int cand = 0; cand < n; ++cand) {
      if (!(p1[gens[k]] == p2[cand])) continue;
      images[k] = cand;
      if (detail::closure_extend(q1, q2, gens, images, k + 1, scratch) &&
          self(self, k + 1))
        return true;
      images[k] = -1;
    }
    return false;
  };

  if (!rec(rec, 0)) return std::nullopt;
  QuandleHom hom{q1, q2, mapping};
  if (!hom.verify() || !hom.is_bijective()) return std::nullopt;
  return hom;
}

}  // namespace quandles
