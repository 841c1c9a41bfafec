#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "quandles/pres/presentation.hpp"

namespace quandles {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)),
        position(pos) {}
};

// Recursive-descent parser for the presentation DSL:
//   presentation := '<' gens '|' rels '>'
//   gens := ident (',' ident)*
//   rels := [rel (',' rel)*]
//   rel  := expr '=' expr
//   expr := term (op term)*            (left associative)
//   op   := '*' | '/' | '*^' int | '/^' int
//   term := ident | '(' expr ')'
// '#' starts a comment running to end of line; whitespace is insignificant.
class PresentationParser {
 public:
  explicit PresentationParser(std::string text) : text_(std::move(text)) {}

  Presentation parse() {
    expect('<');
    pres_.generators.push_back(ident());
    while (peek() == ',') {
      get();
      pres_.generators.push_back(ident());
    }
    pres_.validate();  // catches duplicate generators
    expect('|');
    if (peek() != '>') {
      relation();
      while (peek() == ',') {
        get();
        relation();
      }
    }
    expect('>');
    skip_ws();
    if (pos_ < text_.size())
      throw ParseError("trailing input after presentation", pos_);
    return pres_;
  }

 private:
  void relation() {
    TermPtr lhs = expr();
    expect('=');
    TermPtr rhs = expr();
    pres_.relations.emplace_back(std::move(lhs), std::move(rhs));
  }

  TermPtr expr() {
    TermPtr t = atom();
    for (;;) {
      char c = peek();
      if (c != '*' && c != '/') return t;
      size_t oppos = pos_;
      get();
      bool bar = c == '/';
      if (peek_raw() == '^') {
        get();
        long n = integer();
        if (n < 0)
          throw ParseError("negative iteration count in *^/ /^ form", oppos);
        TermPtr r = atom();
        t = term_op_pow(std::move(t), r, (int)n, bar);
      } else {
        TermPtr r = atom();
        t = bar ? term_opbar(std::move(t), std::move(r))
                : term_op(std::move(t), std::move(r));
      }
    }
  }

  TermPtr atom() {
    char c = peek();
    if (c == '(') {
      get();
      TermPtr t = expr();
      expect(')');
      return t;
    }
    size_t at = pos_;
    std::string name = ident();
    int g = pres_.generator_index(name);
    if (g < 0) throw ParseError("unknown generator '" + name + "'", at);
    return term_gen(g);
  }

  std::string ident() {
    skip_ws();
    size_t at = pos_;
    if (at >= text_.size() || !(std::isalpha((unsigned char)text_[at]) ||
                                text_[at] == '_'))
      throw ParseError("expected identifier", at);
    size_t end = at;
    while (end < text_.size() && (std::isalnum((unsigned char)text_[end]) ||
                                  text_[end] == '_'))
      ++end;
    pos_ = end;
    return text_.substr(at, end - at);
  }

  long integer() {
    skip_ws();
    size_t at = pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_]))
      throw ParseError("expected integer", at);
    long v = 0;
    while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) throw ParseError("iteration count too large", at);
      ++pos_;
    }
    return neg ? -v : v;
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace((unsigned char)c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  // No whitespace skip: distinguishes '*^' from '* ^'.
  char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }
  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    get();
  }

  std::string text_;
  size_t pos_ = 0;
  Presentation pres_;
};

inline Presentation parse_presentation(const std::string& text) {
  return PresentationParser(text).parse();
}

}  // namespace quandles
