#ifndef F5_POLYNOMIAL_HPP
#define F5_POLYNOMIAL_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "f5/field.hpp"
#include "f5/monomial.hpp"

namespace f5 {

template <class Field>
struct Term {
  Monomial mono;
  typename Field::Element coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: terms strictly descending under the ring's order,
/// no zero coefficients. The zero polynomial has no terms.
///
/// A Polynomial does not know its ring; build and combine them through
/// PolyRing, which maintains the invariants.
template <class Field>
class Polynomial {
 public:
  using Element = typename Field::Element;

  Polynomial() = default;
  /// `terms` must already be sorted, merged and free of zeros.
  explicit Polynomial(std::vector<Term<Field>> terms) : terms_(std::move(terms)) {}

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::span<const Term<Field>> terms() const noexcept { return terms_; }

  const Term<Field>& head() const { return terms_.front(); }
  const Monomial& ht() const { return terms_.front().mono; }
  const Element& hc() const { return terms_.front().coeff; }
  /// The polynomial minus its head term.
  Polynomial lot() const { return Polynomial({terms_.begin() + 1, terms_.end()}); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term<Field>> terms_;
};

template <class Field>
struct SPolynomial {
  Monomial u1;
  Monomial u2;
  Polynomial<Field> s;
};

/// Arithmetic context: field, variable names and monomial order.
template <class Field>
class PolyRing {
 public:
  using Element = typename Field::Element;
  using Poly = Polynomial<Field>;
  /// Called once per reduction step with (reducer position, c, m) where the
  /// step performed was p -= c*m*G[position].
  using StepObserver = std::function<void(std::size_t, const Element&, const Monomial&)>;

  PolyRing(Field field, MonomialOrder order, std::vector<std::string> names);

  const Field& field() const noexcept { return field_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t nvars() const noexcept { return names_.size(); }
  std::span<const std::string> names() const noexcept { return names_; }

  Monomial one_monomial() const { return Monomial(nvars()); }
  Monomial variable(std::size_t var, Monomial::Exponent power = 1) const;

  Poly zero() const { return Poly(); }
  Poly constant(const Element& c) const { return term(c, one_monomial()); }
  Poly term(const Element& c, const Monomial& m) const;
  /// Sorts, merges equal monomials and drops zero coefficients.
  Poly from_terms(std::vector<Term<Field>> terms) const;

  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly neg(const Poly& a) const;
  Poly scale(const Poly& a, const Element& c) const;
  Poly mul_term(const Poly& a, const Element& c, const Monomial& m) const;
  Poly mul(const Poly& a, const Poly& b) const;
  /// a - c*m*b.
  Poly sub_mul(const Poly& a, const Element& c, const Monomial& m, const Poly& b) const;
  /// Scaled to head coefficient one; zero stays zero.
  Poly monic(const Poly& a) const;

  bool is_constant(const Poly& a) const { return a.size() == 1 && a.ht().is_one(); }

  /// HC(p2)*u1*p1 - HC(p1)*u2*p2 with u_k = lcm(HT p1, HT p2) / HT p_k.
  SPolynomial<Field> spol(const Poly& p1, const Poly& p2) const;

  /// Head-reduces p by the first reducer (in sequence order) whose head
  /// term divides HT(p), until no head term divides; the result is monic.
  Poly top_reduce(const Poly& p, std::span<const Poly> reducers) const;
  /// Full normal form (every term irreducible), first-reducer rule. Not
  /// normalized.
  Poly normal_form(const Poly& p, std::span<const Poly> reducers,
                   const StepObserver& observe = {}) const;

  std::string to_string(const Poly& p) const;
  std::string to_string(const Monomial& m) const { return f5::to_string(m, names_); }

 private:
  void require_vars(const Monomial& m) const;

  Field field_;
  MonomialOrder order_;
  std::vector<std::string> names_;
};

extern template class PolyRing<RationalField>;
extern template class PolyRing<PrimeField>;

}  // namespace f5

#endif  // F5_POLYNOMIAL_HPP
