#include "f5/falsifier.hpp"

namespace f5 {

namespace {

// Clause b for one component: a basis element of the same index whose head
// divides u*Gamma(Sig(r_k)) and whose head lies below HT(f_k0)*Gamma(Sig).
template <class Field>
std::size_t part_b_witness(const Monomial& u, std::size_t pos, const BasisState<Field>& state,
                           const PolyRing<Field>& ring) {
  const LabeledPoly<Field>& r = state.at(pos);
  const std::size_t k0 = r.sig.index;
  const Monomial& f_head = state.at(k0).poly.ht();
  Monomial target = u * r.sig.gamma;
  for (std::size_t q = 1; q <= state.size(); ++q) {
    const LabeledPoly<Field>& prev = state.at(q);
    if (prev.sig.index != k0 || !prev.poly.ht().divides(target)) continue;
    if (ring.order().less(f_head * prev.sig.gamma, prev.poly.ht())) return q;
  }
  return 0;
}

template <class Field>
CompleteVerdict part_b(const CriticalPair& pair, const BasisState<Field>& state, const PolyRing<Field>& ring) {
  CompleteVerdict out;
  for (Side side : {Side::i, Side::j}) {
    if (std::size_t w = part_b_witness(pair.multiplier(side), pair.position(side), state, ring)) {
      out.completely_normalized = false;
      out.via = 'b';
      out.side = side;
      out.witness = w;
      break;
    }
  }
  return out;
}

template <class Field>
void check_pair(const CriticalPair& pair, const BasisState<Field>& state, const PolyRing<Field>& ring,
                ImprovedCheckReport& report) {
  ++report.pairs_checked;
  if (!part_b(pair, state, ring).completely_normalized) ++report.part_b_firings;
  bool normalized = is_normalized(pair, state).normalized;
  if (completely_normalized(pair, state, ring).completely_normalized != normalized) ++report.disagreements;
}

}  // namespace

void ImprovedCheckReport::merge(const ImprovedCheckReport& other) {
  elements.insert(elements.end(), other.elements.begin(), other.elements.end());
  pairs_checked += other.pairs_checked;
  part_b_firings += other.part_b_firings;
  disagreements += other.disagreements;
  element_violations += other.element_violations;
}

template <class Field>
CompleteVerdict completely_normalized(const CriticalPair& pair, const BasisState<Field>& state,
                                      const PolyRing<Field>& ring) {
  NormalizedVerdict a = is_normalized(pair, state);
  if (!a.normalized) {
    CompleteVerdict out;
    out.completely_normalized = false;
    out.via = 'a';
    out.side = a.components.front().side;
    out.witness = a.witness;
    return out;
  }
  return part_b(pair, state, ring);
}

template <class Field>
ImprovedCheckReport scan_run(const BasisState<Field>& state, const PolyRing<Field>& ring) {
  ImprovedCheckReport report;
  for (std::size_t pos = 1; pos <= state.size(); ++pos) {
    const LabeledPoly<Field>& r = state.at(pos);
    ElementCheck e;
    e.position = pos;
    e.index = r.sig.index;
    e.gamma = r.sig.gamma;
    e.input = state.is_input(pos);
    e.outcome = ring.order().compare(state.at(e.index).poly.ht() * e.gamma, r.poly.ht());
    e.ok = e.input ? e.outcome == 0 : e.outcome > 0;
    if (!e.ok) ++report.element_violations;
    report.elements.push_back(std::move(e));
  }
  for (const CriticalPair& pair : state.pairs) check_pair(pair, state, ring, report);
  return report;
}

template <class Field>
void ShadowCheck<Field>::operator()(const CriticalPair& pair, const BasisState<Field>& state) const {
  check_pair(pair, state, *ring_, *report_);
}

std::string render_report(const ImprovedCheckReport& report) {
  std::string out;
  out += "improved-criterion elements: " + std::to_string(report.elements.size()) + "\n";
  out += "improved-criterion element violations: " + std::to_string(report.element_violations) + "\n";
  out += "improved-criterion pairs checked: " + std::to_string(report.pairs_checked) + "\n";
  out += "improved-criterion disagreements: " + std::to_string(report.disagreements) + "\n";
  out += "improved-criterion part(b) firings: " + std::to_string(report.part_b_firings) + "\n";
  return out;
}

#define F5_INSTANTIATE_FALSIFIER(F)                                                               \
  template CompleteVerdict completely_normalized(const CriticalPair&, const BasisState<F>&,       \
                                                 const PolyRing<F>&);                             \
  template ImprovedCheckReport scan_run(const BasisState<F>&, const PolyRing<F>&);                \
  template class ShadowCheck<F>;

F5_INSTANTIATE_FALSIFIER(RationalField)
F5_INSTANTIATE_FALSIFIER(PrimeField)

}  // namespace f5
