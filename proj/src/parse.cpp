#include "reeskit/parse.hpp"

#include <cctype>
#include <limits>

#include "reeskit/errors.hpp"

namespace reeskit {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Poly parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (peek() == '+') {
      throw ParseError("unary '+' is not allowed", pos_);
    }
    terms.push_back(parse_term(negative));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') throw ParseError(std::string("unexpected character '") + c + "'", pos_);
      ++pos_;
      terms.push_back(parse_term(c == '-'));
    }
    return Poly::from_terms(ring_, std::move(terms));
  }

private:
  Term parse_term(bool negative) {
    skip_ws();
    const std::size_t start = pos_;
    Rational coeff = 1;
    bool have_coeff = false;
    if (!at_end() && is_digit(peek())) {
      coeff = parse_coeff();
      have_coeff = true;
    }
    Monomial::Storage exps(ring_->nvars(), 0);
    bool have_var = false;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      std::size_t save = pos_;
      if (peek() == '*') {
        if (!have_coeff && !have_var) throw ParseError("'*' without a left operand", pos_);
        ++pos_;
        skip_ws();
        if (at_end() || !is_ident_start(peek())) {
          if (!at_end() && is_digit(peek())) throw ParseError("coefficient must precede variables", pos_);
          throw ParseError("expected variable after '*'", pos_);
        }
      } else if (!is_ident_start(peek())) {
        pos_ = save;
        break;
      }
      const std::size_t name_pos = pos_;
      std::string name;
      while (!at_end() && is_ident_char(peek())) name += text_[pos_++];
      auto idx = ring_->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", name_pos);
      Exponent e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        e = parse_exponent();
      }
      if (__builtin_add_overflow(exps[*idx], e, &exps[*idx])) throw ResourceCapExceeded("exponent overflow");
      have_var = true;
    }
    if (!have_coeff && !have_var) throw ParseError("expected a term", start);
    if (negative) coeff = -coeff;
    return Term{Monomial(std::span<const Exponent>(exps.data(), exps.size())), coeff};
  }

  Rational parse_coeff() {
    std::string num = digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t den_pos = pos_;
      if (at_end() || !is_digit(peek())) throw ParseError("expected denominator", pos_);
      std::string den = digits();
      if (mpz_class(den) == 0) throw ParseError("zero denominator", den_pos);
      return Rational(mpz_class(num), mpz_class(den));
    }
    return Rational(mpz_class(num), 1);
  }

  Exponent parse_exponent() {
    skip_ws();
    const std::size_t at = pos_;
    bool paren = false;
    if (!at_end() && peek() == '(') {
      paren = true;
      ++pos_;
      skip_ws();
    }
    if (!at_end() && peek() == '-') throw ParseError("negative exponent", at);
    if (at_end() || !is_digit(peek())) throw ParseError("expected non-negative integer exponent", pos_);
    std::string d = digits();
    if (!at_end() && (peek() == '.' || peek() == '/')) throw ParseError("non-integer exponent", at);
    if (paren) {
      skip_ws();
      if (at_end() || peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
    }
    mpz_class v(d);
    if (v > std::numeric_limits<Exponent>::max()) throw ResourceCapExceeded("exponent too large");
    return static_cast<Exponent>(v.get_si());
  }

  std::string digits() {
    std::string out;
    while (!at_end() && is_digit(peek())) out += text_[pos_++];
    return out;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

std::vector<Poly> parse_poly_list(std::string_view text, const RingPtr& ring, char sep) {
  std::vector<Poly> out;
  std::size_t start = 0;
  for (;;) {
    const auto end = text.find(sep, start);
    std::string_view piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    try {
      out.push_back(parse_poly(piece, ring));
    } catch (const ParseError& e) {
      throw ParseError(std::string("in '") + std::string(piece) + "': " + e.message(), start + e.position());
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::string> parse_var_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto end = text.find(',', start);
    std::string_view piece = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
    if (piece.empty() || !is_ident_start(piece.front())) throw ParseError("invalid variable name", start);
    for (char c : piece)
      if (!is_ident_char(c)) throw ParseError("invalid variable name '" + std::string(piece) + "'", start);
    out.emplace_back(piece);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace reeskit
