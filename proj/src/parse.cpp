#include "holopois/parse.hpp"

#include <cctype>
#include <optional>
#include <string>

#include "holopois/errors.hpp"

namespace holopois {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ChartPtr& chart) : text_(text), chart_(chart) {}

  Poly parse_poly_text() {
    Poly p = expr();
    expect_end();
    return p;
  }

  Polyvector parse_polyvector_text() {
    Polyvector acc = signed_polyvector_term();
    while (!at_end()) {
      const char c = peek();
      if (c != '+' && c != '-') error(std::string("unexpected '") + c + "'");
      ++pos_;
      Polyvector term = signed_polyvector_term();
      if (!term.is_zero() && !acc.is_zero() && term.degree() != acc.degree())
        error("polyvector terms of different degrees");
      if (c == '+') {
        acc += term;
      } else {
        acc -= term;
      }
    }
    return acc;
  }

 private:
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }
  [[noreturn]] void error_at(const std::string& msg, std::size_t pos) const { throw ParseError(msg, pos + 1); }

  void expect_end() {
    skip_ws();
    if (pos_ < text_.size()) error(std::string("unexpected '") + text_[pos_] + "'");
  }

  // expr := ['-'|'+'] term (('+'|'-') ['-'|'+'] term)*
  Poly expr() {
    skip_ws();
    Poly sum = signed_term();
    while (true) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Poly t = signed_term();
      if (c == '+') {
        sum += t;
      } else {
        sum -= t;
      }
    }
    return sum;
  }

  Poly signed_term() {
    skip_ws();
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      ++pos_;
    }
    Poly t = term();
    return negate ? -t : t;
  }

  Poly term() {
    Poly prod = factor();
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      prod *= factor();
    }
    return prod;
  }

  Poly factor() {
    Poly b = base();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) error("expected a nonnegative integer exponent");
      if (digits.size() > 6) error_at("exponent too large", start);
      b = b.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return b;
  }

  Poly base() {
    skip_ws();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      skip_ws();
      if (peek() != ')') error("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = read_digits();
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t start = pos_;
        std::string den = read_digits();
        if (den.empty()) error("expected a denominator");
        if (den.find_first_not_of('0') == std::string::npos) error_at("zero denominator", start);
        num += '/' + den;
      }
      return Poly::constant(chart_, parse_rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      std::string id = read_identifier();
      if (auto idx = chart_->index_of(id)) return Poly::variable(chart_, *idx);
      throw UnknownIdentifier(id, start + 1);
    }
    if (c == '\0') error("unexpected end of input");
    error(std::string("unexpected '") + c + "'");
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string read_identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // Variable index when the identifier at the cursor is a frame token "d<var>".
  std::optional<unsigned> peek_frame_token() {
    skip_ws();
    if (!std::isalpha(static_cast<unsigned char>(peek()))) return std::nullopt;
    std::size_t save = pos_;
    std::string id = read_identifier();
    pos_ = save;
    if (id.size() < 2 || id[0] != 'd' || chart_->index_of(id)) return std::nullopt;
    if (auto idx = chart_->index_of(std::string_view(id).substr(1))) return static_cast<unsigned>(*idx);
    return std::nullopt;
  }

  Polyvector frame_with(const Poly& coefficient) {
    std::vector<unsigned> idx;
    while (true) {
      auto var = peek_frame_token();
      if (!var) error("expected a frame token such as d" + chart_->name(0));
      read_identifier();
      idx.push_back(*var);
      skip_ws();
      if (peek() != '^') break;
      ++pos_;
    }
    if (idx.size() > chart_->size()) return Polyvector::zero(chart_, static_cast<int>(chart_->size()));
    return Polyvector::frame(coefficient, idx);
  }

  Polyvector signed_polyvector_term() {
    skip_ws();
    if (peek() == '-' || peek() == '+') {
      const bool negate = peek() == '-';
      ++pos_;
      Polyvector t = signed_polyvector_term();
      return negate ? -t : t;
    }
    if (peek_frame_token()) return frame_with(Poly::constant(chart_, 1));
    Poly coef = term();
    if (peek_frame_token()) return frame_with(coef);
    skip_ws();
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      throw UnknownIdentifier(read_identifier(), start + 1);
    }
    return Polyvector::function(coef);
  }

  std::string_view text_;
  const ChartPtr& chart_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const ChartPtr& chart) { return Parser(text, chart).parse_poly_text(); }

Polyvector parse_polyvector(std::string_view text, const ChartPtr& chart) {
  return Parser(text, chart).parse_polyvector_text();
}

}  // namespace holopois
