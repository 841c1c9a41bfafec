#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "quandles/core/finite_quandle.hpp"
#include "quandles/pres/presentation.hpp"

namespace quandles {

struct EnumerationStats {
  long classes_created = 0;
  long merges = 0;
  long deductions = 0;
  long expansions = 0;
};

// Result of realizing a presentation by saturation.
struct EnumerationResult {
  enum class Outcome { Finite, BudgetExceeded };
  Outcome outcome = Outcome::BudgetExceeded;
  std::optional<FiniteQuandle> quandle;  // set iff Finite
  std::vector<int> generator_images;    // element index per generator
  EnumerationStats stats;

  bool finite() const { return outcome == Outcome::Finite; }
};

// Realizes a finitely presented quandle as an operation table by
// congruence closure over ground terms.
//
// Classes of terms are tracked by union-find.  Partial entries a*b = c are
// the only state; x *bar y = z is stored as z*y = x.  The deduction rules:
//   - idempotence: every class c carries c*c = c;
//   - injectivity of right translations: a*b = c and a'*b = c force a = a';
//   - right self-distributivity, propagated incrementally around every new
//     entry and re-checked globally before accepting a closed table;
//   - congruence: entries are rehashed after every merge, so equal
//     arguments share results (the compatibility moves on both sides);
//   - relation tracing: a relation u = v makes the translations *u and *v
//     equal, so the word over generator translations obtained from
//     *(p*q) = (*q)^-1 (*p)(*q) must act as the identity; it is traced at
//     every class, with one-gap deductions, before the frontier advances.
// New classes come from tracing gaps (generator columns, breadth-first by
// class age) and, once those close, from the first undefined product.
// Merges happen only under deductions valid in every model of the
// presentation, so a closed table is the presented quandle itself.
class SaturationEnumerator {
 public:
  explicit SaturationEnumerator(const Presentation& p, long budget = 20000)
      : pres_(p), budget_(budget) {
    p.validate();
    if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  }

  EnumerationResult run() {
    for (size_t g = 0; g < pres_.generators.size(); ++g)
      gen_class_.push_back(new_class());
    build_relator_words();
    if (!exceeded_) {
      for (const auto& [lhs, rhs] : pres_.relations) {
        int l = materialize(lhs);
        if (exceeded_) break;
        int r = materialize(rhs);
        if (exceeded_) break;
        merge(l, r);
        process_queues();
      }
    }
    while (!exceeded_) {
      process_queues();
      if (trace_all_relators(true)) continue;
      if (!expand()) break;  // table total and verified
    }
    EnumerationResult res;
    res.stats = stats_;
    if (exceeded_) return res;

    res.outcome = EnumerationResult::Outcome::Finite;
    res.quandle = extract_table();
    for (int g : gen_class_)
      res.generator_images.push_back(compact_id_[find(g)]);
    res.quandle->set_generators(res.generator_images);
    return res;
  }

 private:
  using Key = std::uint64_t;
  static Key key(int a, int b) {
    return (Key(std::uint32_t(a)) << 32) | std::uint32_t(b);
  }

  // ---- classes ----

  int new_class() {
    if (stats_.classes_created >= budget_) {
      exceeded_ = true;
      return 0;
    }
    int c = (int)parent_.size();
    parent_.push_back(c);
    rows_.emplace_back();
    cols_.emplace_back();
    preim_.emplace_back();
    ++stats_.classes_created;
    set_entry(c, c, c);
    return c;
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) pending_merges_.emplace_back(a, b);
  }

  // ---- the partial operation table ----

  // Records a*b = c (canonicalized); conflicts queue merges.
  void set_entry(int a, int b, int c) {
    a = find(a), b = find(b), c = find(c);
    auto it = table_.find(key(a, b));
    if (it != table_.end()) {
      int c0 = find(it->second);
      if (c0 != c) merge(c0, c);
      return;
    }
    auto inv = inverse_.find(key(b, c));
    if (inv != inverse_.end()) {
      int a0 = find(inv->second);
      // injectivity of (* b); the entry is recorded anyway and the
      // rehash after the merge folds the duplicates
      if (a0 != a) merge(a0, a);
    } else {
      inverse_.emplace(key(b, c), a);
    }
    table_.emplace(key(a, b), c);
    rows_[a].push_back(b);
    cols_[b].push_back(a);
    preim_[c].push_back(key(a, b));
    dirty_.push_back(key(a, b));
    ++stats_.deductions;
  }

  int lookup(int a, int b) {
    auto it = table_.find(key(find(a), find(b)));
    return it == table_.end() ? -1 : find(it->second);
  }

  // Existing class a with a*z = u, or -1 when no entry witnesses it yet.
  int lookup_bar(int u, int z) {
    u = find(u), z = find(z);
    auto it = inverse_.find(key(z, u));
    if (it == inverse_.end()) return -1;
    int a = find(it->second);
    return lookup(a, z) == u ? a : -1;
  }

  // ---- merging ----

  void apply_merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // smaller id survives
    parent_[b] = a;
    ++stats_.merges;

    auto rehash_pair = [&](int x, int y) {
      auto it = table_.find(key(x, y));
      if (it == table_.end()) return;
      int c = it->second;
      table_.erase(it);
      set_entry(find(x), find(y), find(c));
    };
    std::vector<int> row = std::move(rows_[b]);
    std::vector<int> col = std::move(cols_[b]);
    std::vector<Key> pre = std::move(preim_[b]);
    rows_[b].clear();
    cols_[b].clear();
    preim_[b].clear();
    for (int y : row) rehash_pair(b, y);
    for (int x : col) rehash_pair(x, b);
    for (Key k : pre) {
      auto it = table_.find(k);
      if (it == table_.end()) continue;
      int x = int(k >> 32), y = int(k & 0xffffffffu);
      int c = it->second;
      table_.erase(it);
      set_entry(find(x), find(y), find(c));
    }
    rebuild_inverse_around(a);
  }

  // The inverse index may hold entries recorded before merges; re-derive
  // the slice around the surviving class and queue any injectivity
  // conflicts it reveals.
  void rebuild_inverse_around(int a) {
    for (int y : rows_[a]) touch_inverse(a, y);
    for (int x : cols_[a]) touch_inverse(x, a);
  }
  void touch_inverse(int x, int y) {
    auto it = table_.find(key(x, y));
    if (it == table_.end()) return;
    int c = find(it->second);
    auto inv = inverse_.find(key(y, c));
    if (inv == inverse_.end())
      inverse_.emplace(key(y, c), x);
    else if (find(inv->second) != find(x))
      merge(inv->second, x);
  }

  void process_queues() {
    while (!pending_merges_.empty() || !dirty_.empty()) {
      if (exceeded_) return;
      if (!pending_merges_.empty()) {
        auto [a, b] = pending_merges_.front();
        pending_merges_.pop_front();
        apply_merge(a, b);
        continue;
      }
      Key k = dirty_.front();
      dirty_.pop_front();
      int a = int(k >> 32), b = int(k & 0xffffffffu);
      if (find(a) != a || find(b) != b) continue;  // superseded
      if (table_.find(k) == table_.end()) continue;
      propagate_distributivity(a, b);
    }
  }

  // ---- right self-distributivity ----

  // All law consequences that involve the entry x*y = w in one of its five
  // product positions, for instances whose other products are defined.
  //   law: (x*y)*z = (x*z)*(y*z)
  void propagate_distributivity(int x, int y) {
    int w = lookup(x, y);
    if (w < 0) return;

    // inner pair (x,y): z runs over defined columns of x and of y
    for (int z : std::vector<int>(rows_[x]))
      if (!exceeded_) equate_rsd(x, y, z);
    for (int z : std::vector<int>(rows_[y]))
      if (!exceeded_) equate_rsd(x, y, z);
    // as x*z (z = y): instances (x, y2, y)
    for (int y2 : std::vector<int>(rows_[x]))
      if (!exceeded_) equate_rsd(x, y2, y);
    // as y*z (y = x, z = y): instances (x2, x, y)
    for (int x2 : std::vector<int>(cols_[x]))
      if (!exceeded_) equate_rsd(x2, x, y);
    // as the outer-left product ((p*q)*y with p*q = x)
    for (Key k : std::vector<Key>(preim_[find(x)])) {
      if (exceeded_) return;
      int p = int(k >> 32), q = int(k & 0xffffffffu);
      if (lookup(p, q) == find(x)) equate_rsd(p, q, y);
    }
    // as the outer-right product ((p*z)*(q*z) with p*z = x, q*z = y)
    for (Key kd : std::vector<Key>(preim_[find(x)])) {
      if (exceeded_) return;
      int p = int(kd >> 32), z = int(kd & 0xffffffffu);
      if (lookup(p, z) != find(x)) continue;
      for (Key ke : std::vector<Key>(preim_[find(y)])) {
        int q = int(ke >> 32), z2 = int(ke & 0xffffffffu);
        if (find(z2) != find(z)) continue;
        if (lookup(q, z2) != find(y)) continue;
        equate_rsd(p, q, z);
      }
    }
  }

  // One instance of the law at (x,y,z).  Injectivity of the right
  // translations also recovers unknown left factors from known products.
  void equate_rsd(int x, int y, int z) {
    int xy = lookup(x, y);
    int xz = lookup(x, z);
    int yz = lookup(y, z);
    if (xy >= 0 && xz >= 0 && yz >= 0) {
      int lhs = lookup(xy, z);
      int rhs = lookup(xz, yz);
      if (lhs >= 0 && rhs >= 0) {
        if (lhs != rhs) merge(lhs, rhs);
      } else if (lhs >= 0) {
        set_entry(xz, yz, lhs);
      } else if (rhs >= 0) {
        set_entry(xy, z, rhs);
      }
      return;
    }
    if (xy < 0 && xz >= 0 && yz >= 0) {
      int rhs = lookup(xz, yz);
      if (rhs >= 0) {
        int a = lookup_bar(rhs, z);  // x*y = ((x*z)*(y*z)) bar z
        if (a >= 0) set_entry(find(x), find(y), a);
      }
      return;
    }
    if (xy >= 0 && xz < 0 && yz >= 0) {
      int lhs = lookup(xy, z);
      if (lhs >= 0) {
        int d = lookup_bar(lhs, yz);  // x*z = ((x*y)*z) bar (y*z)
        if (d >= 0) set_entry(find(x), find(z), d);
      }
    }
  }

  // ---- relation tracing ----

  // Letters act on classes: +g is (* s_g), -(g+1) is (*bar s_g).
  int act(int x, int letter) {
    int g = find(gen_class_[letter >= 0 ? letter : -letter - 1]);
    return letter >= 0 ? lookup(x, g) : lookup_bar(x, g);
  }
  int act_inverse(int x, int letter) {
    return act(x, letter >= 0 ? -(letter + 1) : -letter - 1);
  }

  // Word of generator translations realizing (* t) for a ground term t:
  //   *(p * q)    = (*q)^-1 (*p) (*q)
  //   *(p bar q)  = (*q) (*p) (*q)^-1
  // read left to right in application order.
  static void translation_word(const TermPtr& t, std::vector<int>& out) {
    if (t->kind == Term::Kind::Generator) {
      out.push_back(t->gen);
      return;
    }
    std::vector<int> q;
    translation_word(t->rhs, q);
    bool bar = t->kind == Term::Kind::OpBar;
    std::vector<int> qinv;
    for (auto it = q.rbegin(); it != q.rend(); ++it)
      qinv.push_back(*it >= 0 ? -(*it + 1) : -*it - 1);
    const std::vector<int>& pre = bar ? q : qinv;
    const std::vector<int>& post = bar ? qinv : q;
    out.insert(out.end(), pre.begin(), pre.end());
    translation_word(t->lhs, out);
    out.insert(out.end(), post.begin(), post.end());
  }

  void build_relator_words() {
    for (const auto& [lhs, rhs] : pres_.relations) {
      std::vector<int> w;
      translation_word(lhs, w);
      std::vector<int> v;
      translation_word(rhs, v);
      for (auto it = v.rbegin(); it != v.rend(); ++it)
        w.push_back(*it >= 0 ? -(*it + 1) : -*it - 1);
      // free reduction
      std::vector<int> red;
      for (int l : w) {
        int inv = l >= 0 ? -(l + 1) : -l - 1;
        if (!red.empty() && red.back() == inv)
          red.pop_back();
        else
          red.push_back(l);
      }
      if (!red.empty()) relators_.push_back(std::move(red));
    }
  }

  // Traces every relator at every live class.  A completed trace merges
  // its endpoint with the start; a trace with a single undefined step is
  // filled by deduction.  With define_gaps, the first undefined step gets
  // a fresh class instead (the breadth-first frontier).  Returns true if
  // any table change happened.
  bool trace_all_relators(bool define_gaps) {
    bool progress = false;
    for (bool again = true; again && !exceeded_;) {
      again = false;
      for (int x = 0; x < (int)parent_.size() && !exceeded_; ++x) {
        if (find(x) != x) continue;
        for (const auto& rel : relators_) {
          if (trace_relator(x, rel, define_gaps)) {
            process_queues();
            progress = again = true;
          }
          if (exceeded_) break;
        }
      }
    }
    return progress;
  }

  bool trace_relator(int x, const std::vector<int>& rel, bool define_gaps) {
    const int len = (int)rel.size();
    int f = find(x);
    int i = 0;
    while (i < len) {
      int nxt = act(f, rel[i]);
      if (nxt < 0) break;
      f = nxt;
      ++i;
    }
    if (i == len) {
      if (f != find(x)) {
        merge(f, x);
        return true;
      }
      return false;
    }
    int b = find(x);
    int j = len;
    while (j > i + 1) {
      int prv = act_inverse(b, rel[j - 1]);
      if (prv < 0) break;
      b = prv;
      --j;
    }
    if (j == i + 1) {
      // exactly one missing step: rel[i] sends f to b
      int letter = rel[i];
      int g = find(gen_class_[letter >= 0 ? letter : -letter - 1]);
      if (letter >= 0)
        set_entry(f, g, b);
      else
        set_entry(b, g, f);
      return true;
    }
    if (define_gaps) {
      int letter = rel[i];
      int g = find(gen_class_[letter >= 0 ? letter : -letter - 1]);
      int c = new_class();
      if (exceeded_) return false;
      ++stats_.expansions;
      if (letter >= 0)
        set_entry(f, g, c);
      else
        set_entry(c, g, f);
      return true;
    }
    return false;
  }

  // ---- term materialization ----

  int materialize(const TermPtr& t) {
    if (exceeded_) return 0;
    if (t->kind == Term::Kind::Generator) return find(gen_class_[t->gen]);
    int l = materialize(t->lhs);
    if (exceeded_) return 0;
    int r = materialize(t->rhs);
    if (exceeded_) return 0;
    if (t->kind == Term::Kind::Op) {
      int c = lookup(l, r);
      if (c >= 0) return c;
      c = new_class();
      if (exceeded_) return 0;
      set_entry(find(l), find(r), c);
      process_queues();
      return find(c);
    }
    int c = lookup_bar(find(l), find(r));
    if (c >= 0) return c;
    c = new_class();
    if (exceeded_) return 0;
    set_entry(c, find(r), find(l));
    process_queues();
    return find(c);
  }

  // ---- expansion ----

  std::vector<int> live_classes() {
    std::vector<int> out;
    for (int i = 0; i < (int)parent_.size(); ++i)
      if (find(i) == i) out.push_back(i);
    return out;
  }

  // With generator columns closed by tracing, the remaining columns are
  // conjugates of them: y = p*g gives x*y = ((x bar g)*p)*g.  Deduce when
  // possible, then fall back to a fresh class.
  bool try_deduce_product(int a, int b) {
    for (Key k : preim_[b]) {
      int p = int(k >> 32), g = int(k & 0xffffffffu);
      if (lookup(p, g) != b) continue;
      int z1 = lookup_bar(a, g);
      if (z1 < 0) continue;
      int z2 = lookup(z1, p);
      if (z2 < 0) continue;
      int z3 = lookup(z2, g);
      if (z3 < 0) continue;
      set_entry(a, b, z3);
      return true;
    }
    return false;
  }

  // Defines the first missing product, generator columns first, others in
  // class-age order.  Returns false when the table is total and the laws
  // re-verify globally.
  bool expand() {
    auto live = live_classes();
    for (int g : gen_class_) {
      int b = find(g);
      for (int a : live) {
        if (lookup(a, b) >= 0) continue;
        int c = new_class();
        if (exceeded_) return false;
        set_entry(find(a), b, c);
        ++stats_.expansions;
        return true;
      }
    }
    for (int b : live)
      for (int a : live) {
        if (lookup(a, b) >= 0) continue;
        if (try_deduce_product(a, b)) return true;
        int c = new_class();
        if (exceeded_) return false;
        set_entry(find(a), find(b), c);
        ++stats_.expansions;
        return true;
      }
    // total: one full law re-check guards against any propagation gap
    return verify_closure(live);
  }

  // With a total table, re-run every law instance; queues fixes and
  // reports whether anything new was deduced.
  bool verify_closure(const std::vector<int>& live) {
    bool progress = false;
    for (int x : live) {
      for (int y : live) {
        int xy = lookup(x, y);
        for (int z : live) {
          int lhs = lookup(xy, z);
          int rhs = lookup(lookup(x, z), lookup(y, z));
          if (lhs != rhs) {
            merge(lhs, rhs);
            progress = true;
          }
        }
      }
      if (lookup(x, x) != find(x)) {
        merge(lookup(x, x), x);
        progress = true;
      }
    }
    return progress;
  }

  FiniteQuandle extract_table() {
    auto live = live_classes();
    compact_id_.assign(parent_.size(), -1);
    for (size_t i = 0; i < live.size(); ++i) compact_id_[live[i]] = (int)i;
    const int n = (int)live.size();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        t[i][j] = compact_id_[lookup(live[i], live[j])];
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "e" + std::to_string(i);
    for (size_t g = 0; g < gen_class_.size(); ++g)
      labels[compact_id_[find(gen_class_[g])]] = pres_.generators[g];
    return FiniteQuandle(std::move(labels), std::move(t));
  }

  Presentation pres_;
  long budget_;
  bool exceeded_ = false;
  std::vector<int> parent_;
  std::vector<int> gen_class_;
  std::vector<std::vector<int>> relators_;
  std::unordered_map<Key, int> table_;    // (a,b) -> c  :  a*b = c
  std::unordered_map<Key, int> inverse_;  // (b,c) -> a  :  a*b = c
  std::vector<std::vector<int>> rows_;    // a -> right arguments defined
  std::vector<std::vector<int>> cols_;    // b -> left arguments defined
  std::vector<std::vector<Key>> preim_;   // c -> keys of entries valued c
  std::deque<std::pair<int, int>> pending_merges_;
  std::deque<Key> dirty_;
  EnumerationStats stats_;
  std::vector<int> compact_id_;
};

inline EnumerationResult enumerate_presentation(const Presentation& p,
                                                long budget = 20000) {
  return SaturationEnumerator(p, budget).run();
}

}  // namespace quandles
