#include "f5/syzygy.hpp"

namespace f5 {

namespace {

template <class Field>
const LabeledPoly<Field>& at_position(std::size_t pos, BasisSpan<Field> basis) {
  if (pos == 0 || pos > basis.size())
    throw StructuralError("module vector refers to position " + std::to_string(pos) +
                          " outside a basis of " + std::to_string(basis.size()));
  return basis[pos - 1];
}

}  // namespace

template <class Field>
Polynomial<Field> evaluate(const ModuleVector<Field>& v, BasisSpan<Field> basis,
                           const PolyRing<Field>& ring) {
  Polynomial<Field> out;
  for (const auto& [pos, a] : v.entries()) out = ring.add(out, ring.mul(a, at_position(pos, basis).poly));
  return out;
}

template <class Field>
Signature module_term(const Monomial& t, std::size_t pos, BasisSpan<Field> basis) {
  return sig_mul(t, at_position(pos, basis).sig);
}

template <class Field>
Signature mht(const ModuleVector<Field>& v, BasisSpan<Field> basis, const PolyRing<Field>& ring) {
  if (v.is_zero()) throw std::domain_error("module head term of the zero vector");
  std::optional<Signature> best;
  for (const auto& [pos, a] : v.entries()) {
    Signature s = module_term<Field>(a.ht(), pos, basis);
    if (!best || sig_less(*best, s, ring.order())) best = std::move(s);
  }
  return *best;
}

template <class Field>
ModuleVector<Field> expand_to_generators(const ModuleVector<Field>& v, BasisSpan<Field> basis,
                                         std::size_t generators, const PolyRing<Field>& ring) {
  ModuleVector<Field> out = v;
  // Witnesses only refer to earlier positions, so one descending sweep suffices.
  for (std::size_t pos = basis.size(); pos > generators; --pos) {
    if (!out.at(pos)) continue;
    const auto& w = at_position(pos, basis).witness;
    if (!w) throw std::logic_error("position " + std::to_string(pos) + " carries no witness");
    Polynomial<Field> a = out.take(pos);
    for (const auto& t : a.terms()) out.add_scaled(ring, t.coeff, t.mono, *w);
  }
  return out;
}

template <class Field>
typename Field::Element signature_coefficient(const ModuleVector<Field>& v, const Signature& target,
                                              BasisSpan<Field> basis, std::size_t generators,
                                              const PolyRing<Field>& ring) {
  ModuleVector<Field> flat = expand_to_generators(v, basis, generators, ring);
  const Polynomial<Field>* a = flat.at(target.index);
  if (a)
    for (const auto& t : a->terms())
      if (t.mono == target.gamma) return t.coeff;
  return ring.field().zero();
}

template <class Field>
ModuleVector<Field> principal_syzygy(std::size_t a, std::size_t b, BasisSpan<Field> basis,
                                     const PolyRing<Field>& ring) {
  ModuleVector<Field> out;
  if (a == b) {
    at_position(a, basis);
    return out;
  }
  out.add_entry(ring, b, at_position(a, basis).poly);
  out.add_entry(ring, a, ring.neg(at_position(b, basis).poly));
  return out;
}

template <class Field>
TRepresentationCheck check_t_representation(const TRepresentation<Field>& rep,
                                            BasisSpan<Field> basis, const PolyRing<Field>& ring) {
  TRepresentationCheck out;
  const auto& names = ring.names();
  Polynomial<Field> value = evaluate(rep.combination, basis, ring);
  if (!(value == rep.target.poly)) {
    out.violated = TRepresentationCheck::Clause::evaluation;
    out.reason = "combination evaluates to " + ring.to_string(value) + ", expected " +
                 ring.to_string(rep.target.poly);
    return out;
  }
  for (const auto& [pos, lambda] : rep.combination.entries()) {
    const LabeledPoly<Field>& r = at_position(pos, basis);
    Monomial head = lambda.ht() * r.poly.ht();
    if (!ring.order().less(head, rep.t)) {
      out.violated = TRepresentationCheck::Clause::head_term;
      out.position = pos;
      out.reason = "HT(lambda_" + std::to_string(pos) + "*p_" + std::to_string(pos) +
                   ") = " + to_string(head, names) + " is not below t = " + to_string(rep.t, names);
      return out;
    }
    Signature s = sig_mul(lambda.ht(), r.sig);
    if (sig_less(rep.target.sig, s, ring.order())) {
      out.violated = TRepresentationCheck::Clause::signature;
      out.position = pos;
      out.reason = "HT(lambda_" + std::to_string(pos) + ")*Sig(r_" + std::to_string(pos) +
                   ") = " + to_string(s, names) + " exceeds " + to_string(rep.target.sig, names);
      return out;
    }
  }
  return out;
}

#define F5_INSTANTIATE_SYZYGY(F)                                                                 \
  template Polynomial<F> evaluate(const ModuleVector<F>&, BasisSpan<F>, const PolyRing<F>&);     \
  template Signature module_term<F>(const Monomial&, std::size_t, BasisSpan<F>);                 \
  template Signature mht(const ModuleVector<F>&, BasisSpan<F>, const PolyRing<F>&);              \
  template ModuleVector<F> expand_to_generators(const ModuleVector<F>&, BasisSpan<F>, std::size_t, \
                                                const PolyRing<F>&);                             \
  template F::Element signature_coefficient(const ModuleVector<F>&, const Signature&,            \
                                            BasisSpan<F>, std::size_t, const PolyRing<F>&);      \
  template ModuleVector<F> principal_syzygy(std::size_t, std::size_t, BasisSpan<F>,              \
                                            const PolyRing<F>&);                                 \
  template TRepresentationCheck check_t_representation(const TRepresentation<F>&, BasisSpan<F>,  \
                                                       const PolyRing<F>&);

F5_INSTANTIATE_SYZYGY(RationalField)
F5_INSTANTIATE_SYZYGY(PrimeField)

}  // namespace f5
