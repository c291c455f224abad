#ifndef F5_FIELD_HPP
#define F5_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace f5 {

/// The rationals, backed by GMP.
class RationalField {
 public:
  using Element = mpq_class;

  static constexpr bool is_prime_field = false;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero");
    return Element(1) / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  /// num/den with den != 0.
  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw std::domain_error("zero denominator");
    Element q(num, den);
    q.canonicalize();
    return q;
  }
  Element from_int(long v) const { return Element(v); }

  std::string to_string(const Element& a) const { return a.get_str(); }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }

  std::string name() const { return "q"; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Integers modulo a word-sized prime. Elements are canonical in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  static constexpr bool is_prime_field = true;
  static constexpr std::uint32_t default_prime = 32003;

  explicit PrimeField(std::uint32_t p = default_prime) : p_(p) {
    if (p < 2) throw std::invalid_argument("characteristic must be a prime >= 2");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument(std::to_string(p) + " is not prime");
  }

  std::uint32_t characteristic() const noexcept { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }

  Element add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : static_cast<Element>(a + (p_ - b)); }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(std::uint64_t{a} * b % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const {
    if (a == 0) throw std::domain_error("division by zero");
    // Extended Euclid on signed 64-bit values.
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Element>(t);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element from_integer(const mpz_class& v) const {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Element>(r.get_ui());
  }
  Element from_fraction(const mpz_class& num, const mpz_class& den) const {
    Element d = from_integer(den);
    if (d == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
    return div(from_integer(num), d);
  }
  Element from_int(long v) const { return from_integer(mpz_class(v)); }

  /// Symmetric representative, e.g. p-1 prints as "-1".
  std::string to_string(Element a) const {
    if (a > p_ / 2) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }
  bool is_negative(Element a) const { return a > p_ / 2; }

  std::string name() const { return "gf " + std::to_string(p_); }
  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace f5

#endif  // F5_FIELD_HPP
