#ifndef F5_SYZYGY_HPP
#define F5_SYZYGY_HPP

#include <span>
#include <string>

#include "f5/module_vector.hpp"
#include "f5/signature.hpp"

namespace f5 {

/// Basis position ell lives at basis[ell - 1].
template <class Field>
using BasisSpan = std::span<const LabeledPoly<Field>>;

/// sum_ell a_ell * p_ell. Throws StructuralError on a position outside the basis.
template <class Field>
Polynomial<Field> evaluate(const ModuleVector<Field>& v, BasisSpan<Field> basis,
                           const PolyRing<Field>& ring);

/// Module term t*Sig(r_pos) of the monomial t placed at position pos.
template <class Field>
Signature module_term(const Monomial& t, std::size_t pos, BasisSpan<Field> basis);

/// Largest module term HT(a_ell)*Sig(r_ell) over the entries of v.
/// Entries at different positions are not cancelled against each other.
/// Throws std::domain_error on the zero vector.
template <class Field>
Signature mht(const ModuleVector<Field>& v, BasisSpan<Field> basis, const PolyRing<Field>& ring);

/// Sum of the coefficients sitting on the module term `target`, with every
/// non-generator position expanded through its witness. For an admissible
/// witness of r this is the coefficient of Sig(r) once the witness is
/// rewritten over the input generators.
template <class Field>
typename Field::Element signature_coefficient(const ModuleVector<Field>& v, const Signature& target,
                                              BasisSpan<Field> basis, std::size_t generators,
                                              const PolyRing<Field>& ring);

/// p_a*e_b - p_b*e_a.
template <class Field>
ModuleVector<Field> principal_syzygy(std::size_t a, std::size_t b, BasisSpan<Field> basis,
                                     const PolyRing<Field>& ring);

/// Rewrites v over the input generators e_1..e_m by substituting every
/// position above m with its witness, recursively.
template <class Field>
ModuleVector<Field> expand_to_generators(const ModuleVector<Field>& v, BasisSpan<Field> basis,
                                         std::size_t generators, const PolyRing<Field>& ring);

template <class Field>
struct TRepresentation {
  LabeledPoly<Field> target;
  Monomial t;
  ModuleVector<Field> combination;
};

struct TRepresentationCheck {
  enum class Clause { none, evaluation, head_term, signature };

  Clause violated = Clause::none;
  std::size_t position = 0;  // offending entry, 0 for the evaluation clause
  std::string reason;

  bool valid() const noexcept { return violated == Clause::none; }
};

/// Checks an admissible labeled t-representation: the combination
/// evaluates to poly(target), every HT(lambda_j*p_j) < t and every
/// HT(lambda_j)*Sig(r_j) is at most Sig(target). Reports the first failure.
template <class Field>
TRepresentationCheck check_t_representation(const TRepresentation<Field>& rep,
                                            BasisSpan<Field> basis, const PolyRing<Field>& ring);

}  // namespace f5

#endif  // F5_SYZYGY_HPP
