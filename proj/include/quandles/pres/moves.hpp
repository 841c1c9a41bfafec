#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "quandles/pres/free_quandle.hpp"
#include "quandles/pres/presentation.hpp"

namespace quandles {

using RelationPair = std::pair<FreeQuandleElement, FreeQuandleElement>;
using RelationSet = std::vector<RelationPair>;

inline RelationSet relation_set_of(const Presentation& p) {
  RelationSet r;
  for (const auto& [lhs, rhs] : p.relations)
    r.emplace_back(term_to_free(lhs), term_to_free(rhs));
  return r;
}

// The five enlargement moves on a relation set.
enum class ConsequenceMove {
  Reflexivity,           // (a): add (x, x)
  Symmetry,              // (b): add (y, x) for (x, y) in R
  Transitivity,          // (c): add (x, z) for (x, y), (y, z) in R
  TranslateByGenerator,  // (d): add (x*s, y*s) and (x bar s, y bar s)
  ActOnBothSides         // (e): add (z*x, z*y) and (z bar x, z bar y)
};

struct ConsequenceArgs {
  std::optional<FreeQuandleElement> element;  // x for (a), z for (e)
  int relation = -1;                          // for (b), (d), (e)
  int relation2 = -1;                         // second premise for (c)
  int generator = -1;                         // s for (d)
};

// Applies one move and returns the enlarged set.  Additions are sound:
// any quandle satisfying R satisfies them.
inline RelationSet consequence_step(const RelationSet& r, ConsequenceMove move,
                                    const ConsequenceArgs& args) {
  auto need_rel = [&](int i) -> const RelationPair& {
    if (i < 0 || i >= (int)r.size())
      throw std::invalid_argument("relation index out of range");
    return r[(size_t)i];
  };
  RelationSet out = r;
  switch (move) {
    case ConsequenceMove::Reflexivity: {
      if (!args.element) throw std::invalid_argument("move (a) needs x");
      out.emplace_back(*args.element, *args.element);
      break;
    }
    case ConsequenceMove::Symmetry: {
      const auto& [x, y] = need_rel(args.relation);
      out.emplace_back(y, x);
      break;
    }
    case ConsequenceMove::Transitivity: {
      const auto& [x, y1] = need_rel(args.relation);
      const auto& [y2, z] = need_rel(args.relation2);
      if (!(y1 == y2))
        throw std::invalid_argument("move (c) premises do not chain");
      out.emplace_back(x, z);
      break;
    }
    case ConsequenceMove::TranslateByGenerator: {
      const auto& [x, y] = need_rel(args.relation);
      if (args.generator < 0)
        throw std::invalid_argument("move (d) needs a generator");
      FreeQuandleElement s(args.generator);
      out.emplace_back(x.op(s), y.op(s));
      out.emplace_back(x.op(s, true), y.op(s, true));
      break;
    }
    case ConsequenceMove::ActOnBothSides: {
      const auto& [x, y] = need_rel(args.relation);
      if (!args.element) throw std::invalid_argument("move (e) needs z");
      const FreeQuandleElement& z = *args.element;
      out.emplace_back(z.op(x), z.op(y));
      out.emplace_back(z.op(x, true), z.op(y, true));
      break;
    }
  }
  return out;
}

enum class ConsequenceVerdict { Yes, Unknown };

// Bounded search: is the pair derivable within `depth` rounds of move
// applications?  Each round applies every move with arguments drawn from
// the current set, the generators, and a pool of elements seen so far.
// Never answers "no".
inline ConsequenceVerdict is_consequence_bounded(const RelationSet& r,
                                                 const RelationPair& target,
                                                 int depth, int ngenerators,
                                                 size_t max_pairs = 50000) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  std::set<std::pair<FreeQuandleElement, FreeQuandleElement>> seen(r.begin(),
                                                                   r.end());
  auto found = [&] {
    return seen.count({target.first, target.second}) > 0 ||
           target.first == target.second;
  };
  if (found()) return ConsequenceVerdict::Yes;

  std::set<FreeQuandleElement> pool;
  auto add_pool = [&](const FreeQuandleElement& e) { pool.insert(e); };
  for (const auto& [x, y] : r) {
    add_pool(x);
    add_pool(y);
  }
  add_pool(target.first);
  add_pool(target.second);
  for (int g = 0; g < ngenerators; ++g) add_pool(FreeQuandleElement(g));

  for (int round = 0; round < depth; ++round) {
    std::vector<RelationPair> fresh;
    auto emit = [&](FreeQuandleElement a, FreeQuandleElement b) {
      if (seen.emplace(a, b).second) fresh.emplace_back(std::move(a), std::move(b));
    };
    // (a)
    for (const auto& x : pool) emit(x, x);
    std::vector<RelationPair> current(seen.begin(), seen.end());
    for (const auto& [x, y] : current) {
      emit(y, x);  // (b)
      for (int g = 0; g < ngenerators && seen.size() < max_pairs; ++g) {
        FreeQuandleElement s(g);
        emit(x.op(s), y.op(s));  // (d)
        emit(x.op(s, true), y.op(s, true));
      }
      for (const auto& z : pool) {
        if (seen.size() >= max_pairs) break;
        emit(z.op(x), z.op(y));  // (e)
        emit(z.op(x, true), z.op(y, true));
      }
    }
    // (c): transitive steps through the current endpoints
    {
      std::map<FreeQuandleElement, std::vector<FreeQuandleElement>> by_left;
      for (const auto& [x, y] : current) by_left[x].push_back(y);
      for (const auto& [x, y] : current) {
        if (seen.size() >= max_pairs) break;
        auto it = by_left.find(y);
        if (it == by_left.end()) continue;
        for (const auto& z : it->second) emit(x, z);
      }
    }
    for (const auto& [x, y] : fresh) {
      add_pool(x);
      add_pool(y);
    }
    if (found()) return ConsequenceVerdict::Yes;
    if (seen.size() >= max_pairs) break;
  }
  return ConsequenceVerdict::Unknown;
}

}  // namespace quandles
