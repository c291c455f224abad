#include "f5/signature.hpp"

namespace f5 {

std::strong_ordering sig_compare(const Signature& a, const Signature& b, const MonomialOrder& ord) {
  if (a.index != b.index) return b.index <=> a.index;
  return ord.compare(a.gamma, b.gamma);
}

std::string to_string(const Signature& s, std::span<const std::string> names) {
  return to_string(s.gamma, names) + "*e" + std::to_string(s.index);
}

template <class Field>
LabeledSPolynomial<Field> spol_labeled(const LabeledPoly<Field>& r1, const LabeledPoly<Field>& r2,
                                       const PolyRing<Field>& ring) {
  if (r1.poly.is_zero() || r2.poly.is_zero())
    throw std::domain_error("labeled S-polynomial of a zero polynomial");
  if (r1.sig == r2.sig && r1.poly == r2.poly) {
    // An element paired with itself: the two multiples cancel exactly.
    LabeledSPolynomial<Field> out;
    out.result.sig = r1.sig;
    if (r1.witness) out.result.witness = ModuleVector<Field>();
    out.u1 = ring.one_monomial();
    out.u2 = ring.one_monomial();
    return out;
  }
  Monomial l = lcm(r1.poly.ht(), r2.poly.ht());
  Monomial u1 = l / r1.poly.ht();
  Monomial u2 = l / r2.poly.ht();
  Signature s1 = sig_mul(u1, r1.sig);
  Signature s2 = sig_mul(u2, r2.sig);
  auto cmp = sig_compare(s1, s2, ring.order());
  if (cmp == 0)
    throw SignatureCollision("labeled S-polynomial with equal multiplied signatures " +
                             to_string(s1, ring.names()));
  bool swapped = cmp < 0;
  const LabeledPoly<Field>& a = swapped ? r2 : r1;
  const LabeledPoly<Field>& b = swapped ? r1 : r2;
  if (swapped) std::swap(u1, u2);

  LabeledSPolynomial<Field> out;
  out.result.sig = sig_mul(u1, a.sig);
  out.result.poly = ring.sub_mul(ring.mul_term(a.poly, b.poly.hc(), u1), a.poly.hc(), u2, b.poly);
  if (a.witness && b.witness) {
    ModuleVector<Field> w = a.witness->scaled(ring, b.poly.hc(), u1);
    w.add_scaled(ring, ring.field().neg(a.poly.hc()), u2, *b.witness);
    out.result.witness = std::move(w);
  }
  out.u1 = std::move(u1);
  out.u2 = std::move(u2);
  out.swapped = swapped;
  return out;
}

template LabeledSPolynomial<RationalField> spol_labeled(const LabeledPoly<RationalField>&,
                                                        const LabeledPoly<RationalField>&,
                                                        const PolyRing<RationalField>&);
template LabeledSPolynomial<PrimeField> spol_labeled(const LabeledPoly<PrimeField>&,
                                                     const LabeledPoly<PrimeField>&,
                                                     const PolyRing<PrimeField>&);

}  // namespace f5
