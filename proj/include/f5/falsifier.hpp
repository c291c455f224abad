#ifndef F5_FALSIFIER_HPP
#define F5_FALSIFIER_HPP

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "f5/f5_engine.hpp"

namespace f5 {

/// Outcome of the relaxed criterion on one pair. Clause a is the plain F5
/// criterion; clause b admits a witness of equal index whose signature
/// multiple matches and whose head drops below HT(f_k0)*Gamma(Sig).
struct CompleteVerdict {
  bool completely_normalized = true;
  char via = 0;  // 'a' or 'b' when not completely normalized
  Side side = Side::i;
  std::size_t witness = 0;
};

template <class Field>
CompleteVerdict completely_normalized(const CriticalPair& pair, const BasisState<Field>& state,
                                      const PolyRing<Field>& ring);

struct ElementCheck {
  std::size_t position = 0;
  std::size_t index = 0;
  Monomial gamma;
  std::strong_ordering outcome = std::strong_ordering::equal;  // HT(f_k0)*gamma vs HT(p)
  bool input = false;
  bool ok = false;
};

struct ImprovedCheckReport {
  std::vector<ElementCheck> elements;
  std::size_t pairs_checked = 0;
  std::size_t part_b_firings = 0;
  std::size_t disagreements = 0;  // completely_normalized differs from is_normalized
  std::size_t element_violations = 0;

  bool clean() const { return part_b_firings == 0 && disagreements == 0 && element_violations == 0; }
  void merge(const ImprovedCheckReport& other);
};

/// Element inequalities on the final basis plus both predicates on every
/// pair the run created.
template <class Field>
ImprovedCheckReport scan_run(const BasisState<Field>& state, const PolyRing<Field>& ring);

/// Engine hook evaluating both predicates on each pair as it is created.
/// Copies share one report.
template <class Field>
class ShadowCheck {
 public:
  explicit ShadowCheck(const PolyRing<Field>& ring)
      : ring_(&ring), report_(std::make_shared<ImprovedCheckReport>()) {}

  void operator()(const CriticalPair& pair, const BasisState<Field>& state) const;
  const ImprovedCheckReport& report() const { return *report_; }

 private:
  const PolyRing<Field>* ring_;
  std::shared_ptr<ImprovedCheckReport> report_;
};

std::string render_report(const ImprovedCheckReport& report);

}  // namespace f5

#endif  // F5_FALSIFIER_HPP
