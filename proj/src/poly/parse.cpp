// Reader for the textual polynomial format written by Polynomial::to_string:
//   poly   := [sign] term { ('+' | '-') term }
//   term   := factor { '*' factor }
//   factor := integer ['/' integer] | variable ['^' integer]
// Whitespace is allowed between tokens.

#include <cctype>

#include "bipoisson/errors.hpp"
#include "bipoisson/polynomial.hpp"

namespace bipoisson {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Polynomial poly() {
    std::vector<Term> terms;
    skip_ws();
    bool negative = false;
    if (peek('-') || peek('+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    terms.push_back(term(negative));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      if (!peek('+') && !peek('-')) fail("expected '+' or '-'");
      negative = text_[pos_] == '-';
      ++pos_;
      terms.push_back(term(negative));
    }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  Term term(bool negative) {
    Term t{Monomial{}, negative ? -1 : 1};
    factor(t);
    for (;;) {
      skip_ws();
      if (!peek('*')) break;
      ++pos_;
      factor(t);
    }
    return t;
  }

  void factor(Term& t) {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      auto start = pos_;
      digits();
      if (peek('/')) {
        ++pos_;
        digits();
      }
      t.coeff *= parse_rational(text_.substr(start, pos_ - start));
      return;
    }
    VarId v = variable();
    unsigned exp = 1;
    skip_ws();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      auto start = pos_;
      digits();
      exp = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
      if (exp == 0 || exp > 60000) fail("bad exponent");
    }
    t.mono = t.mono * Monomial::of(v, exp);
  }

  VarId variable() {
    auto start = pos_;
    if (text_.substr(pos_).starts_with("S[")) {
      auto close = text_.find(']', pos_);
      if (close == std::string_view::npos) fail("unterminated S[");
      pos_ = close + 1;
    } else {
      while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (pos_ == start) fail("expected a variable or a number");
    std::string name;
    for (char ch : text_.substr(start, pos_ - start)) {
      if (!std::isspace(static_cast<unsigned char>(ch))) name.push_back(ch);
    }
    return VarId::parse(name);
  }

  void digits() {
    auto start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  bool peek(char ch) const { return !at_end() && text_[pos_] == ch; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " +
                     what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return Reader(text).poly(); }

}  // namespace bipoisson
