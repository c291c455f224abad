#ifndef F5_BUCHBERGER_HPP
#define F5_BUCHBERGER_HPP

#include <span>
#include <string>
#include <vector>

#include "f5/polynomial.hpp"
#include "f5/stats.hpp"

namespace f5 {

struct BuchbergerOptions {
  bool gebauer_moeller = true;  // false: every pair is reduced
  std::size_t max_pairs = 2'000'000;
};

enum class PairFate { product, chain, zero, added };

struct PairRecord {
  std::size_t a = 0;  // indices into the list of all polynomials ever added
  std::size_t b = 0;
  PairFate fate = PairFate::added;
};

template <class Field>
struct BuchbergerResult {
  std::vector<Polynomial<Field>> basis;  // monic, not interreduced
  RunStats stats;
  std::vector<PairRecord> log;
};

/// Groebner basis of the ideal generated by `generators`.
template <class Field>
BuchbergerResult<Field> buchberger_basis(std::span<const Polynomial<Field>> generators,
                                         const PolyRing<Field>& ring,
                                         const BuchbergerOptions& options = {});

/// Both arguments must be Groebner bases; compares their reduced forms.
template <class Field>
bool ideal_equal(std::span<const Polynomial<Field>> a, std::span<const Polynomial<Field>> b,
                 const PolyRing<Field>& ring);

/// Reduced monic basis, ascending by head term. Shares no code with the
/// signature engine.
template <class Field>
std::vector<Polynomial<Field>> reduced_basis(std::span<const Polynomial<Field>> basis,
                                             const PolyRing<Field>& ring);

/// Buchberger's criterion: every S-polynomial of `basis` reduces to zero.
template <class Field>
bool is_groebner(std::span<const Polynomial<Field>> basis, const PolyRing<Field>& ring);

std::string fate_name(PairFate fate);

}  // namespace f5

#endif  // F5_BUCHBERGER_HPP
