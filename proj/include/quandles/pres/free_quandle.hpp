#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "quandles/pres/term.hpp"

namespace quandles {

// Letters of a free-group word over the generator alphabet: +g encodes the
// generator g, -(g+1) encodes its inverse.
inline int letter_inverse(int l) { return l >= 0 ? -(l + 1) : -l - 1; }
inline int letter_generator(int l) { return l >= 0 ? l : -l - 1; }

inline std::vector<int> word_inverse(const std::vector<int>& w) {
  std::vector<int> r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    r.push_back(letter_inverse(*it));
  return r;
}

inline void word_append_reduced(std::vector<int>& w, int letter) {
  if (!w.empty() && w.back() == letter_inverse(letter))
    w.pop_back();
  else
    w.push_back(letter);
}

// Element g^-1 s g of the free quandle FQ(S): the union of the conjugacy
// classes of the generators in the free group F(S).  Normal form: the
// conjugator g is freely reduced and does not begin with s or s^-1.
class FreeQuandleElement {
 public:
  FreeQuandleElement(int base, std::vector<int> conjugator)
      : base_(base), conj_(std::move(conjugator)) {
    normalize();
  }
  explicit FreeQuandleElement(int base) : base_(base) {}

  int base() const { return base_; }
  const std::vector<int>& conjugator() const { return conj_; }

  // (g^-1 s g) * (h^-1 t h) = (g h^-1 t h)^-1 s (g h^-1 t h); the bar
  // operation conjugates by the inverse instead.
  FreeQuandleElement op(const FreeQuandleElement& y, bool bar = false) const {
    std::vector<int> w = conj_;
    std::vector<int> hinv = word_inverse(y.conj_);
    for (int l : hinv) word_append_reduced(w, l);
    word_append_reduced(w, bar ? letter_inverse(y.base_) : y.base_);
    for (int l : y.conj_) word_append_reduced(w, l);
    return FreeQuandleElement(base_, std::move(w));
  }

  // The element as a word in the free group, g^-1 s g.
  std::vector<int> group_word() const {
    std::vector<int> w = word_inverse(conj_);
    w.push_back(base_);
    w.insert(w.end(), conj_.begin(), conj_.end());
    std::vector<int> red;
    for (int l : w) word_append_reduced(red, l);
    return red;
  }

  friend bool operator==(const FreeQuandleElement& a,
                         const FreeQuandleElement& b) {
    return a.base_ == b.base_ && a.conj_ == b.conj_;
  }
  friend bool operator!=(const FreeQuandleElement& a,
                         const FreeQuandleElement& b) {
    return !(a == b);
  }
  friend bool operator<(const FreeQuandleElement& a,
                        const FreeQuandleElement& b) {
    if (a.base_ != b.base_) return a.base_ < b.base_;
    return a.conj_ < b.conj_;
  }

  std::string str(const std::vector<std::string>& names) const {
    std::string s = names[base_];
    if (conj_.empty()) return s;
    s += "^[";
    for (size_t i = 0; i < conj_.size(); ++i) {
      if (i) s += " ";
      int g = letter_generator(conj_[i]);
      s += names[g];
      if (conj_[i] < 0) s += "'";
    }
    return s + "]";
  }

 private:
  void normalize() {
    std::vector<int> red;
    for (int l : conj_) word_append_reduced(red, l);
    size_t k = 0;
    while (k < red.size() && letter_generator(red[k]) == base_) ++k;
    conj_.assign(red.begin() + (long)k, red.end());
  }

  int base_;
  std::vector<int> conj_;
};

// Value of a ground term in the free quandle.
inline FreeQuandleElement term_to_free(const TermPtr& t) {
  if (t->kind == Term::Kind::Generator) return FreeQuandleElement(t->gen);
  FreeQuandleElement l = term_to_free(t->lhs);
  FreeQuandleElement r = term_to_free(t->rhs);
  return l.op(r, t->kind == Term::Kind::OpBar);
}

}  // namespace quandles
