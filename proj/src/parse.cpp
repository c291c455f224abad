#include "f5/parse.hpp"

#include <cctype>

namespace f5 {

namespace {

template <class Field>
class PolynomialParser {
 public:
  using Element = typename Field::Element;

  PolynomialParser(std::string_view text, const PolyRing<Field>& ring, std::size_t line,
                   std::size_t column_offset)
      : text_(text), ring_(ring), line_(line), column_offset_(column_offset) {}

  Polynomial<Field> parse() {
    std::vector<Term<Field>> terms;
    skip_ws();
    if (at_end()) fail("expected a polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      terms.push_back(parse_term(negative));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("unexpected character '") + peek() + "'");
      negative = peek() == '-';
      ++pos_;
    }
    return ring_.from_terms(std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, column_offset_ + pos_ + 1, msg);
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  mpz_class parse_integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Monomial::Exponent parse_exponent() {
    skip_ws();
    if (!at_end() && peek() == '-') fail("negative exponent");
    mpz_class e = parse_integer();
    if (e > 1'000'000) fail("exponent too large");
    return static_cast<Monomial::Exponent>(e.get_ui());
  }

  Term<Field> parse_term(bool negative) {
    const Field& field = ring_.field();
    Element coeff = negative ? field.neg(field.one()) : field.one();
    std::vector<Monomial::Exponent> exps(ring_.nvars(), 0);
    bool any = false;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        mpz_class num = parse_integer();
        mpz_class den = 1;
        skip_ws();
        if (!at_end() && peek() == '/') {
          ++pos_;
          skip_ws();
          std::size_t den_pos = pos_;
          den = parse_integer();
          if (den == 0) {
            pos_ = den_pos;
            fail("zero denominator");
          }
        }
        try {
          coeff = field.mul(coeff, field.from_fraction(num, den));
        } catch (const std::domain_error& e) {
          fail(e.what());
        }
      } else if (ident_start(c)) {
        parse_identifier(exps);
      } else {
        break;
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !(ident_start(peek()) || std::isdigit(static_cast<unsigned char>(peek()))))
          fail("expected a factor after '*'");
      }
    }
    if (!any) fail("expected a term");
    return {Monomial(std::move(exps)), std::move(coeff)};
  }

  // An identifier is either one variable name or a concatenation of names.
  void parse_identifier(std::vector<Monomial::Exponent>& exps) {
    std::size_t start = pos_;
    while (!at_end() && ident_char(peek())) ++pos_;
    std::string_view word = text_.substr(start, pos_ - start);
    std::vector<std::size_t> vars;
    std::size_t i = 0;
    while (i < word.size()) {
      std::size_t best = ring_.nvars();
      std::size_t best_len = 0;
      for (std::size_t v = 0; v < ring_.nvars(); ++v) {
        const std::string& name = ring_.names()[v];
        if (name.size() > best_len && word.substr(i, name.size()) == name) {
          best = v;
          best_len = name.size();
        }
      }
      if (best == ring_.nvars()) {
        pos_ = start;
        fail("unknown variable '" + std::string(word) + "'");
      }
      vars.push_back(best);
      i += best_len;
    }
    Monomial::Exponent power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      power = parse_exponent();
    }
    // The power binds to the last variable of a juxtaposed run: yz^3 = y*z^3.
    for (std::size_t k = 0; k < vars.size(); ++k)
      exps[vars[k]] += (k + 1 == vars.size()) ? power : 1;
  }

  std::string_view text_;
  const PolyRing<Field>& ring_;
  std::size_t line_;
  std::size_t column_offset_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class Field>
Polynomial<Field> parse_polynomial(std::string_view text, const PolyRing<Field>& ring,
                                   std::size_t line, std::size_t column_offset) {
  return PolynomialParser<Field>(text, ring, line, column_offset).parse();
}

template Polynomial<RationalField> parse_polynomial(std::string_view, const PolyRing<RationalField>&,
                                                    std::size_t, std::size_t);
template Polynomial<PrimeField> parse_polynomial(std::string_view, const PolyRing<PrimeField>&,
                                                 std::size_t, std::size_t);

}  // namespace f5
