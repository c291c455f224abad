#ifndef F5_F5_ENGINE_HPP
#define F5_F5_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "f5/signature.hpp"
#include "f5/stats.hpp"
#include "f5/syzygy.hpp"

namespace f5 {

/// Raised when a run exceeds its resource guards or breaks an internal
/// invariant that is checked at run time.
class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Side { i, j };

/// Critical pair of two basis positions. Side i is the one with the larger
/// multiplied signature, so sig = u_i*Sig(r_i) is the pair's signature.
struct CriticalPair {
  Monomial lcm;
  Monomial u_i;
  Monomial u_j;
  std::size_t i = 0;
  std::size_t j = 0;
  Signature sig;
  Signature sig_j;
  std::uint64_t degree = 0;
  std::size_t serial = 0;  // creation order, 0-based

  std::size_t position(Side s) const { return s == Side::i ? i : j; }
  const Monomial& multiplier(Side s) const { return s == Side::i ? u_i : u_j; }
  const Signature& signature(Side s) const { return s == Side::i ? sig : sig_j; }
};

/// Every labeled S-polynomial gets a label when it is created; the label is
/// later resolved to a basis position or to a syzygy.
struct RewriteRule {
  Monomial gamma;
  std::size_t index = 0;
  std::size_t label = 0;
};

enum class LabelStatus { pending, basis, zero };

template <class Field>
struct LabelRecord {
  Signature sig;
  LabelStatus status = LabelStatus::pending;
  std::size_t position = 0;                     // when status == basis
  std::optional<ModuleVector<Field>> syzygy;    // when status == zero and witnesses are tracked
};

enum class Criterion { f5, rewritten, collision };

/// One flagged component of a rejected pair.
struct ComponentVerdict {
  Side side = Side::i;
  std::vector<std::size_t> witnesses;  // F5 criterion: basis positions of larger index
  std::optional<RewriteRule> rule;     // rewritten criterion
};

struct Rejection {
  CriticalPair pair;
  Criterion criterion = Criterion::f5;
  std::vector<ComponentVerdict> components;  // front() is the reported one
  bool at_creation = true;
  std::size_t current_index = 0;
};

/// Counters shared by both engines.
using EngineStats = RunStats;

template <class Field>
struct BasisState {
  std::size_t generators = 0;
  std::size_t current_index = 0;
  std::vector<LabeledPoly<Field>> elements;             // position ell at elements[ell - 1]
  std::vector<std::optional<std::size_t>> element_label;  // nullopt for inputs
  std::vector<LabelRecord<Field>> labels;
  std::vector<std::vector<RewriteRule>> rules;           // rules[index], creation order
  std::vector<CriticalPair> pairs;                       // every pair ever created
  std::vector<Rejection> rejections;
  EngineStats stats;
  bool witnesses = false;
  bool unit_ideal = false;

  std::size_t size() const noexcept { return elements.size(); }
  const LabeledPoly<Field>& at(std::size_t pos) const { return elements.at(pos - 1); }
  std::size_t index_of(std::size_t pos) const { return at(pos).sig.index; }
  bool is_input(std::size_t pos) const { return pos <= generators; }
  BasisSpan<Field> basis() const { return elements; }
  std::vector<Polynomial<Field>> polynomials() const;
};

enum class EventKind { index, pair, reject, reduce, split, zero, new_element, order };

struct TraceEvent {
  EventKind kind;
  std::string text;
};

template <class Field>
struct EngineOptions {
  using PairHook = std::function<void(const CriticalPair&, const BasisState<Field>&)>;

  bool witnesses = false;         // track module witnesses (certificate mode)
  bool verify_witnesses = false;  // check evaluate/mht of witnesses after every step
  bool criteria_at_creation = true;
  bool criteria_on_selection = true;
  bool trace = false;
  std::size_t max_basis_size = 5000;
  std::size_t max_pairs = 2'000'000;
  PairHook on_pair_created;
};

template <class Field>
struct F5Result {
  BasisState<Field> state;
  std::vector<TraceEvent> trace;
};

/// F5 criterion for one component u*r_pos: every basis position whose index
/// exceeds ind(r_pos) and whose head term divides u*Gamma(Sig(r_pos)).
template <class Field>
std::vector<std::size_t> f5_witnesses(const Monomial& u, std::size_t pos,
                                      const BasisState<Field>& state, bool first_only = false);

/// Rewritten criterion for one component u*r_pos: the newest rule of
/// ind(r_pos), created after r_pos itself, whose gamma divides
/// u*Gamma(Sig(r_pos)).
template <class Field>
std::optional<RewriteRule> rewriting_rule(const Monomial& u, std::size_t pos,
                                          const BasisState<Field>& state);

struct NormalizedVerdict {
  bool normalized = true;
  std::size_t witness = 0;                   // first witness found (side i before j)
  std::vector<ComponentVerdict> components;  // every flagged component with all witnesses
};

template <class Field>
NormalizedVerdict is_normalized(const CriticalPair& pair, const BasisState<Field>& state);

struct RewriteVerdict {
  bool rewritable = false;
  std::vector<ComponentVerdict> components;
};

template <class Field>
RewriteVerdict is_rewritable(const CriticalPair& pair, const BasisState<Field>& state);

template <class Field>
struct TopReductionResult {
  enum class Kind { reduced, split, zero };

  Kind kind = Kind::zero;
  LabeledPoly<Field> element;                // reduced element, or the unchanged one on a split
  std::optional<LabeledPoly<Field>> spawned;  // new S-polynomial of a split
  std::size_t reductor = 0;                  // position used for the split
  Monomial multiplier;
  std::size_t steps = 0;
};

/// Reduces r against the active basis without ever raising its signature.
/// Elements of larger index reduce every term; elements of the current
/// index only reduce the head, and only when eligible.
template <class Field>
TopReductionResult<Field> top_reduction_signed(LabeledPoly<Field> r, const BasisState<Field>& state,
                                               const PolyRing<Field>& ring);

template <class Field>
F5Result<Field> incremental_basis(std::span<const Polynomial<Field>> generators,
                                  const PolyRing<Field>& ring,
                                  const EngineOptions<Field>& options = {});

/// The reduced monic Groebner basis, sorted ascending by head term.
template <class Field>
std::vector<Polynomial<Field>> interreduce(std::span<const Polynomial<Field>> basis,
                                           const PolyRing<Field>& ring);

template <class Field>
std::vector<Polynomial<Field>> interreduce(const BasisState<Field>& state, const PolyRing<Field>& ring);

/// Components of the trace renderings.
std::string pair_label(const CriticalPair& pair);
std::string criterion_name(Criterion c);

}  // namespace f5

#endif  // F5_F5_ENGINE_HPP
