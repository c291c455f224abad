#ifndef F5_SIGNATURE_HPP
#define F5_SIGNATURE_HPP

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

#include "f5/module_vector.hpp"
#include "f5/polynomial.hpp"

namespace f5 {

/// A module term gamma*e_index. Signatures carry no coefficient.
struct Signature {
  Monomial gamma;
  std::size_t index = 0;  // 1-based generator index

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Position-over-term with reversed indices: a larger index is smaller;
/// equal indices compare gamma by the term order.
std::strong_ordering sig_compare(const Signature& a, const Signature& b, const MonomialOrder& ord);

inline bool sig_less(const Signature& a, const Signature& b, const MonomialOrder& ord) {
  return sig_compare(a, b, ord) < 0;
}

inline Signature sig_mul(const Monomial& u, const Signature& s) { return {u * s.gamma, s.index}; }

/// `x*z^2*e1`, `1*e3` for a bare generator.
std::string to_string(const Signature& s, std::span<const std::string> names);

/// A polynomial together with its signature. The witness, when tracked, is a
/// module vector over basis positions that evaluates to `poly` and whose
/// module head term is `sig`.
template <class Field>
struct LabeledPoly {
  Signature sig;
  Polynomial<Field> poly;
  std::optional<ModuleVector<Field>> witness;
};

/// u1*Sig(r1) and u2*Sig(r2) are the same module term.
class SignatureCollision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class Field>
struct LabeledSPolynomial {
  LabeledPoly<Field> result;
  Monomial u1;  // multiplier of the signature-defining (larger) operand
  Monomial u2;
  bool swapped = false;  // true when the arguments were exchanged
};

/// Labeled S-polynomial. The operand whose multiplied signature is larger
/// comes first; the arguments are exchanged when needed. The witness is
/// carried along when both operands have one. Pairing an element with
/// itself yields the zero polynomial.
template <class Field>
LabeledSPolynomial<Field> spol_labeled(const LabeledPoly<Field>& r1, const LabeledPoly<Field>& r2,
                                       const PolyRing<Field>& ring);

}  // namespace f5

#endif  // F5_SIGNATURE_HPP
