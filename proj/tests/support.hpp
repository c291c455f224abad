#ifndef F5_TESTS_SUPPORT_HPP
#define F5_TESTS_SUPPORT_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "f5/f5_engine.hpp"
#include "f5/ideal_spec.hpp"
#include "f5/parse.hpp"
#include "f5/polynomial.hpp"

namespace f5::testing {

using Q = RationalField;
using GF = PrimeField;
using PolyQ = Polynomial<Q>;

// Q[x,y,z,t], degrevlex with x > y > z > t.
inline const PolyRing<Q>& xyzt() {
  static const PolyRing<Q> ring(Q{}, MonomialOrder(OrderKind::degrevlex, 4), {"x", "y", "z", "t"});
  return ring;
}

inline PolyQ P(const std::string& text) { return parse_polynomial(text, xyzt()); }

inline Monomial M(const std::string& text) { return P(text).ht(); }

inline std::vector<PolyQ> golden_generators() {
  return {P("yz^3 - x^2t^2"), P("xz^2 - y^2t"), P("x^2y - z^2t")};
}

inline std::vector<PolyQ> golden_basis() {
  return {P("xz^2 - y^2t"),       P("x^2y - z^2t"),        P("yz^3 - x^2t^2"),
          P("y^3zt - x^3t^2"),    P("xy^3t - z^4t"),       P("z^5t - x^4t^2"),
          P("y^5t^2 - x^4zt^2"),  P("x^5t^2 - z^2t^5")};
}

inline F5Result<Q> golden_run(bool witnesses = false) {
  EngineOptions<Q> opt;
  opt.witnesses = witnesses;
  opt.verify_witnesses = witnesses;
  opt.trace = true;
  auto gens = golden_generators();
  return incremental_basis<Q>(gens, xyzt(), opt);
}

inline Signature S(const std::string& gamma, std::size_t index) {
  return {gamma == "1" ? Monomial(4) : M(gamma), index};
}

// Basis position holding signature `sig`, 0 if none.
template <class Field>
std::size_t position_of(const BasisState<Field>& st, const Signature& sig) {
  for (std::size_t pos = 1; pos <= st.size(); ++pos)
    if (st.at(pos).sig == sig) return pos;
  return 0;
}

// The rejection whose reported component is mult * r_k with u*Sig(r_k) = sig.
template <class Field>
const Rejection* find_rejection(const BasisState<Field>& st, Criterion c, const Monomial& mult,
                                const Signature& sig) {
  for (const auto& r : st.rejections) {
    if (r.criterion != c) continue;
    for (const auto& comp : r.components) {
      std::size_t k = r.pair.position(comp.side);
      if (r.pair.multiplier(comp.side) == mult && sig_mul(mult, st.at(k).sig) == sig) return &r;
    }
  }
  return nullptr;
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::vector<Monomial::Exponent> exps(nvars);
  for (auto& x : exps) x = e(rng);
  return Monomial(exps);
}

// Random polynomial with small integer coefficients.
template <class Field>
Polynomial<Field> random_poly(std::mt19937_64& rng, const PolyRing<Field>& ring, std::size_t terms,
                              unsigned max_exp) {
  std::uniform_int_distribution<int> c(-9, 9);
  std::vector<Term<Field>> ts;
  for (std::size_t k = 0; k < terms; ++k) {
    int v = c(rng);
    if (v == 0) v = 1;
    ts.push_back({random_monomial(rng, ring.nvars(), max_exp), ring.field().from_int(v)});
  }
  return ring.from_terms(std::move(ts));
}

// Polynomials as plain maps from exponent vectors to coefficients, with no
// ordering: an arithmetic oracle independent of the sorted representation.
template <class Field>
using DenseMap = std::map<std::vector<Monomial::Exponent>, typename Field::Element>;

template <class Field>
DenseMap<Field> to_map(const Polynomial<Field>& p) {
  DenseMap<Field> m;
  for (const auto& t : p.terms())
    m[std::vector<Monomial::Exponent>(t.mono.exponents().begin(), t.mono.exponents().end())] = t.coeff;
  return m;
}

template <class Field>
void drop_zeros(DenseMap<Field>& m, const Field& K) {
  std::erase_if(m, [&](const auto& kv) { return K.is_zero(kv.second); });
}

template <class Field>
DenseMap<Field> map_mul(const DenseMap<Field>& a, const DenseMap<Field>& b, const Field& K) {
  DenseMap<Field> out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<Monomial::Exponent> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto it = out.find(e);
      if (it == out.end())
        out.emplace(e, K.mul(ca, cb));
      else
        it->second = K.add(it->second, K.mul(ca, cb));
    }
  drop_zeros(out, K);
  return out;
}

template <class Field>
DenseMap<Field> map_add(DenseMap<Field> a, const DenseMap<Field>& b, const Field& K) {
  for (const auto& [e, c] : b) {
    auto it = a.find(e);
    if (it == a.end())
      a.emplace(e, c);
    else
      it->second = K.add(it->second, c);
  }
  drop_zeros(a, K);
  return a;
}

}  // namespace f5::testing

#endif  // F5_TESTS_SUPPORT_HPP
