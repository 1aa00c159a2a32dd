// Concrete syntax for terms: `\x.t`, `\!x.t`, `!t`, left-associative
// application, `<>`, `<t; l=u>`, `t.l`, `#name`, parentheses.
#ifndef LIA_PARSE_HPP
#define LIA_PARSE_HPP

#include <cctype>
#include <string>

#include "lia/term.hpp"

namespace lia {

struct ParseError : Error {
  std::size_t pos;
  ParseError(std::string msg, std::size_t p)
      : Error("parse error at offset " + std::to_string(p) + ": " + std::move(msg)), pos(p) {}
};

namespace detail {

class TermParser {
 public:
  explicit TermParser(std::string src) : s_(std::move(src)) {}

  Term parse() {
    Term t = term();
    skip_ws();
    if (i_ < s_.size()) throw ParseError("trailing input", i_);
    return t;
  }

 private:
  std::string s_;
  std::size_t i_ = 0;

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip_ws();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", i_);
  }
  bool ident_start() {
    skip_ws();
    return i_ < s_.size() &&
           (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_');
  }
  std::string ident() {
    skip_ws();
    if (!ident_start()) throw ParseError("expected identifier", i_);
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
                              s_[i_] == '_' || s_[i_] == '\''))
      ++i_;
    return s_.substr(start, i_ - start);
  }

  Term term() {
    if (peek('\\')) return lambda();
    return application();
  }

  Term lambda() {
    expect('\\');
    bool banged = eat('!');
    std::string x = ident();
    expect('.');
    Term body = term();
    return banged ? blam(x, body) : lam(x, body);
  }

  Term application() {
    Term t = factor();
    for (;;) {
      skip_ws();
      if (peek('\\')) {  // lambda allowed as the final argument
        t = app(t, lambda());
        return t;
      }
      if (ident_start() || peek('(') || peek('<') || peek('!') || peek('#'))
        t = app(t, factor());
      else
        return t;
    }
  }

  Term factor() {
    if (eat('!')) return bang(factor());
    Term t = primary();
    while (eat('.')) t = select(t, ident());
    return t;
  }

  Term primary() {
    skip_ws();
    if (eat('#')) return param(ident());
    if (eat('(')) {
      Term t = term();
      expect(')');
      return t;
    }
    if (eat('<')) {
      if (eat('>')) return rec_empty();
      Term base = term();
      expect(';');
      std::string label = ident();
      expect('=');
      Term field = term();
      expect('>');
      return rec_ext(base, label, field);
    }
    return var(ident());
  }
};

}  // namespace detail

inline Term parse_term(const std::string& src) { return detail::TermParser(src).parse(); }

}  // namespace lia

#endif  // LIA_PARSE_HPP
