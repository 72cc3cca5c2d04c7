#include "nctorus/expression.hpp"

#include <cctype>

namespace nctorus {

namespace {

class Parser {
 public:
  Parser(const std::string& text, ThetaContext ctx) : text_(text), ctx_(ctx) {}

  TorusElement run() {
    TorusElement value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  mpz_class integer() {
    if (!at_digit()) fail("expected an integer");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(text_.substr(start, pos_ - start));
  }

  Rational rational() {
    mpz_class num = integer();
    mpz_class den = 1;
    if (accept('/')) {
      const std::size_t at = pos_;
      den = integer();
      if (den == 0) throw ParseError("division by zero", at);
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  TorusElement scalar(const PhaseScalar& c) const { return TorusElement(c, ctx_); }

  TorusElement expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    TorusElement value = term();
    if (negate) value = -value;
    for (;;) {
      if (accept('+')) value += term();
      else if (accept('-')) value -= term();
      else return value;
    }
  }

  TorusElement term() {
    TorusElement value = factor();
    while (accept('*')) value = value * factor();
    return value;
  }

  TorusElement factor() {
    if (accept('-')) return -factor();
    TorusElement value = primary();
    while (accept('^')) {
      if (accept('*')) {
        value = star(value);
        continue;
      }
      const bool neg = accept('-');
      const std::size_t at = pos_;
      const mpz_class e = integer();
      if (!e.fits_slong_p()) throw ParseError("exponent too large", at);
      try {
        value = value.pow(neg ? -e.get_si() : e.get_si());
      } catch (const std::domain_error& err) {
        throw ParseError(err.what(), at);
      }
    }
    return value;
  }

  TorusElement primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (at_digit()) return scalar(PhaseScalar(rational()));
    if (accept('(')) {
      TorusElement inner = expr();
      expect(')');
      return inner;
    }
    const std::size_t start = pos_;
    const std::string id = identifier();
    if (id.empty()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    if (id == "u") return TorusElement::u(ctx_);
    if (id == "v") return TorusElement::v(ctx_);
    if (id == "U") return star(TorusElement::u(ctx_));
    if (id == "V") return star(TorusElement::v(ctx_));
    if (id == "Q") return scalar(PhaseScalar::q_power(1));
    if (id == "z") {
      expect('(');
      const bool neg = accept('-');
      Rational c = rational();
      expect(')');
      return scalar(PhaseScalar::root(neg ? Rational(-c) : c));
    }
    if (id == "trace" || id == "star") {
      expect('(');
      TorusElement inner = expr();
      expect(')');
      return id == "trace" ? scalar(trace(inner)) : star(inner);
    }
    throw ParseError("unknown identifier '" + id + "'", start);
  }

  const std::string& text_;
  ThetaContext ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

TorusElement evaluate_expression(const std::string& text, ThetaContext ctx) { return Parser(text, ctx).run(); }

}  // namespace nctorus
