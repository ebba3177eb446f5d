#include "syzcurve/parser.hpp"

#include <cctype>
#include <map>

#include "syzcurve/errors.hpp"

namespace syzcurve {

namespace {

constexpr int kMaxExponent = 1000;

using Poly = std::map<Monomial, mpq_class, MonomialOrder>;

void add_into(Poly& acc, const Monomial& u, const mpq_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = acc.try_emplace(u, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) acc.erase(it);
  }
}

Poly constant(const mpq_class& c) {
  Poly p;
  add_into(p, Monomial{}, c);
  return p;
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly p;
  for (const auto& [u, c] : a) {
    for (const auto& [v, e] : b) add_into(p, u * v, c * e);
  }
  return p;
}

Poly power(Poly base, long e) {
  Poly r = constant(1);
  while (e) {
    if (e & 1) r = multiply(r, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Peeks the next significant character, folding U+2212 MINUS SIGN to '-'.
  char peek() {
    skip_space();
    if (pos_ >= text_.size()) return '\0';
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") return '-';
    return text_[pos_];
  }

  void advance() { pos_ += text_.substr(pos_, 3) == "\xE2\x88\x92" ? 3 : 1; }

  Poly expr() {
    Poly acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      advance();
      Poly rhs = term();
      for (const auto& [u, v] : rhs) add_into(acc, u, c == '+' ? v : mpq_class(-v));
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (peek() == '*') {
      advance();
      acc = multiply(acc, factor());
    }
    return acc;
  }

  Poly factor() {
    char c = peek();
    if (c == '-' || c == '+') {
      advance();
      Poly p = factor();
      if (c == '-') {
        for (auto& [u, v] : p) v = -v;
      }
      return p;
    }
    return power_expr();
  }

  Poly power_expr() {
    Poly base = primary();
    if (peek() != '^') return base;
    advance();
    skip_space();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("exponent must be a non-negative integer literal");
    mpz_class e{std::string{digits()}};
    if (e > kMaxExponent) {
      pos_ = start;
      fail("exponent too large");
    }
    return power(std::move(base), e.get_si());
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Poly primary() {
    char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value{mpz_class{std::string{digits()}}};
      if (peek() == '/') {
        advance();
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail("expected integer denominator after '/'");
        mpz_class den{std::string{digits()}};
        if (den == 0) fail("zero denominator");
        value /= mpq_class(den);
      }
      return constant(value);
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      advance();
      Poly p;
      add_into(p, Monomial{c == 'x', c == 'y', c == 'z'}, 1);
      return p;
    }
    if (c == '(') {
      advance();
      Poly p = expr();
      if (peek() != ')') fail("expected ')'");
      advance();
      return p;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

HomogPoly<RationalField> parse_poly(std::string_view text) {
  Poly p = Parser(text).parse();
  if (p.empty()) throw InputError("polynomial is zero");
  const auto& [first, first_coeff] = *p.begin();
  for (const auto& [u, c] : p) {
    if (u.degree() != first.degree()) {
      auto name = [](const Monomial& m) { return m.degree() == 0 ? std::string("1") : to_string(m); };
      throw InputError("polynomial is not homogeneous: term " + name(first) + " has degree " +
                       std::to_string(first.degree()) + " but term " + name(u) + " has degree " +
                       std::to_string(u.degree()));
    }
  }
  HomogPoly<RationalField> f(RationalField{}, first.degree());
  for (const auto& [u, c] : p) f.add_term(u, c);
  return f;
}

}  // namespace syzcurve
