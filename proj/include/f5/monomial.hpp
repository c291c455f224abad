#ifndef F5_MONOMIAL_HPP
#define F5_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace f5 {

/// Raised when two objects from differently-sized rings are combined.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A term of the polynomial ring: a fixed-length vector of exponents.
/// The total degree is cached and kept equal to the exponent sum.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::vector<Exponent> exps);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint64_t degree() const noexcept { return degree_; }
  Exponent operator[](std::size_t var) const { return exps_[var]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  bool is_one() const noexcept { return degree_ == 0; }

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);
  /// Exact quotient; `divisor` must divide *this.
  Monomial operator/(const Monomial& divisor) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
/// True when a and b share no variable.
bool coprime(const Monomial& a, const Monomial& b);

enum class OrderKind { degrevlex, lex };

/// A monomial order on a ring with `precedence.size()` variables.
/// precedence[0] is the largest variable.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::size_t nvars);
  MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence);

  OrderKind kind() const noexcept { return kind_; }
  std::size_t nvars() const noexcept { return precedence_.size(); }
  std::span<const std::size_t> precedence() const noexcept { return precedence_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  OrderKind kind_;
  std::vector<std::size_t> precedence_;
};

inline std::strong_ordering compare(const Monomial& a, const Monomial& b,
                                    const MonomialOrder& ord) {
  return ord.compare(a, b);
}

/// Renders `x*z^2`; the unit monomial renders as "1".
std::string to_string(const Monomial& m, std::span<const std::string> names);

}  // namespace f5

#endif  // F5_MONOMIAL_HPP
