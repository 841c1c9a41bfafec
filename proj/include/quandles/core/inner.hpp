#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "quandles/core/finite_quandle.hpp"

namespace quandles {

// Permutation of quandle elements together with a word in the right
// translations generating it.  Letter +j means (* x_j), letter -(j+1)
// means (*bar x_j); the word reads left to right in application order.
struct InnerPermutation {
  std::vector<int> perm;
  std::vector<int> word;

  int apply(int x) const { return perm[x]; }

  static InnerPermutation identity(int n) {
    InnerPermutation p;
    p.perm.resize(n);
    for (int i = 0; i < n; ++i) p.perm[i] = i;
    return p;
  }

  static InnerPermutation translation(const FiniteQuandle& q, int y,
                                      bool inverse = false) {
    InnerPermutation p;
    p.perm.resize(q.order());
    for (int x = 0; x < q.order(); ++x)
      p.perm[x] = inverse ? q.opbar(x, y) : q.op(x, y);
    p.word = {inverse ? -(y + 1) : y};
    return p;
  }

  // this followed by g (apply this first).
  InnerPermutation then(const InnerPermutation& g) const {
    InnerPermutation r;
    r.perm.resize(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) r.perm[i] = g.perm[perm[i]];
    r.word = word;
    r.word.insert(r.word.end(), g.word.begin(), g.word.end());
    return r;
  }

  InnerPermutation inverse() const {
    InnerPermutation r;
    r.perm.resize(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) r.perm[perm[i]] = (int)i;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      r.word.push_back(*it >= 0 ? -(*it + 1) : -*it - 1);
    return r;
  }

  friend bool operator==(const InnerPermutation& a,
                         const InnerPermutation& b) {
    return a.perm == b.perm;
  }
};

// Full inner automorphism group: closure of the right translations under
// composition.  Words are kept so each element is re-checkable.
inline std::vector<InnerPermutation> inner_group(const FiniteQuandle& q) {
  const int n = q.order();
  std::vector<InnerPermutation> gens;
  for (int y = 0; y < n; ++y) {
    gens.push_back(InnerPermutation::translation(q, y));
    gens.push_back(InnerPermutation::translation(q, y, true));
  }
  std::map<std::vector<int>, int> seen;
  std::vector<InnerPermutation> out;
  auto push = [&](const InnerPermutation& p) {
    if (seen.emplace(p.perm, (int)out.size()).second) out.push_back(p);
  };
  push(InnerPermutation::identity(n));
  for (size_t head = 0; head < out.size(); ++head) {
    InnerPermutation cur = out[head];  // copy: out may reallocate
    for (const auto& g : gens) push(cur.then(g));
  }
  return out;
}

// Orbit of a single element under the inner group.
inline std::vector<int> inner_orbit(const FiniteQuandle& q, int start) {
  std::vector<char> in(q.order(), 0);
  std::vector<int> orbit{start};
  in[start] = 1;
  for (size_t head = 0; head < orbit.size(); ++head) {
    int x = orbit[head];
    for (int y = 0; y < q.order(); ++y) {
      for (int z : {q.op(x, y), q.opbar(x, y)}) {
        if (!in[z]) {
          in[z] = 1;
          orbit.push_back(z);
        }
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

inline bool is_connected(const FiniteQuandle& q) {
  return (int)inner_orbit(q, 0).size() == q.order();
}

}  // namespace quandles
