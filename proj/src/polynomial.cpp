#include "f5/polynomial.hpp"

#include <algorithm>

namespace f5 {

template <class Field>
PolyRing<Field>::PolyRing(Field field, MonomialOrder order, std::vector<std::string> names)
    : field_(std::move(field)), order_(std::move(order)), names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("a polynomial ring needs at least one variable");
  if (order_.nvars() != names_.size())
    throw StructuralError("monomial order and variable list have different lengths");
}

template <class Field>
void PolyRing<Field>::require_vars(const Monomial& m) const {
  if (m.size() != nvars())
    throw StructuralError("monomial has " + std::to_string(m.size()) + " exponents, ring has " +
                          std::to_string(nvars()) + " variables");
}

template <class Field>
Monomial PolyRing<Field>::variable(std::size_t var, Monomial::Exponent power) const {
  std::vector<Monomial::Exponent> e(nvars(), 0);
  e.at(var) = power;
  return Monomial(std::move(e));
}

template <class Field>
auto PolyRing<Field>::term(const Element& c, const Monomial& m) const -> Poly {
  require_vars(m);
  if (field_.is_zero(c)) return Poly();
  return Poly({Term<Field>{m, c}});
}

template <class Field>
auto PolyRing<Field>::from_terms(std::vector<Term<Field>> terms) const -> Poly {
  for (const auto& t : terms) require_vars(t.mono);
  std::sort(terms.begin(), terms.end(),
            [&](const Term<Field>& a, const Term<Field>& b) { return order_.less(b.mono, a.mono); });
  std::vector<Term<Field>> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field_.add(out.back().coeff, t.coeff);
      if (field_.is_zero(out.back().coeff)) out.pop_back();
    } else if (!field_.is_zero(t.coeff)) {
      out.push_back(std::move(t));
    }
  }
  return Poly(std::move(out));
}

template <class Field>
auto PolyRing<Field>::add(const Poly& a, const Poly& b) const -> Poly {
  return sub_mul(a, field_.neg(field_.one()), one_monomial(), b);
}

template <class Field>
auto PolyRing<Field>::sub(const Poly& a, const Poly& b) const -> Poly {
  return sub_mul(a, field_.one(), one_monomial(), b);
}

template <class Field>
auto PolyRing<Field>::neg(const Poly& a) const -> Poly {
  return scale(a, field_.neg(field_.one()));
}

template <class Field>
auto PolyRing<Field>::scale(const Poly& a, const Element& c) const -> Poly {
  return mul_term(a, c, one_monomial());
}

template <class Field>
auto PolyRing<Field>::mul_term(const Poly& a, const Element& c, const Monomial& m) const -> Poly {
  if (field_.is_zero(c) || a.is_zero()) return Poly();
  std::vector<Term<Field>> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) out.push_back({t.mono * m, field_.mul(t.coeff, c)});
  return Poly(std::move(out));
}

template <class Field>
auto PolyRing<Field>::mul(const Poly& a, const Poly& b) const -> Poly {
  Poly acc;
  for (const auto& t : b.terms()) acc = sub_mul(acc, field_.neg(t.coeff), t.mono, a);
  return acc;
}

template <class Field>
auto PolyRing<Field>::sub_mul(const Poly& a, const Element& c, const Monomial& m,
                              const Poly& b) const -> Poly {
  if (field_.is_zero(c) || b.is_zero()) return a;
  require_vars(m);
  std::vector<Term<Field>> out;
  out.reserve(a.size() + b.size());
  auto at = a.terms().begin();
  auto ae = a.terms().end();
  auto bt = b.terms().begin();
  auto be = b.terms().end();
  const Element minus_c = field_.neg(c);
  while (at != ae || bt != be) {
    if (bt == be) {
      out.push_back(*at++);
      continue;
    }
    Monomial bm = bt->mono * m;
    if (at == ae) {
      out.push_back({std::move(bm), field_.mul(minus_c, bt->coeff)});
      ++bt;
      continue;
    }
    auto cmp = order_.compare(at->mono, bm);
    if (cmp > 0) {
      out.push_back(*at++);
    } else if (cmp < 0) {
      out.push_back({std::move(bm), field_.mul(minus_c, bt->coeff)});
      ++bt;
    } else {
      Element v = field_.add(at->coeff, field_.mul(minus_c, bt->coeff));
      if (!field_.is_zero(v)) out.push_back({std::move(bm), std::move(v)});
      ++at;
      ++bt;
    }
  }
  return Poly(std::move(out));
}

template <class Field>
auto PolyRing<Field>::monic(const Poly& a) const -> Poly {
  if (a.is_zero() || field_.is_one(a.hc())) return a;
  return scale(a, field_.inv(a.hc()));
}

template <class Field>
SPolynomial<Field> PolyRing<Field>::spol(const Poly& p1, const Poly& p2) const {
  if (p1.is_zero() || p2.is_zero()) throw std::domain_error("S-polynomial of a zero polynomial");
  Monomial l = lcm(p1.ht(), p2.ht());
  Monomial u1 = l / p1.ht();
  Monomial u2 = l / p2.ht();
  Poly s = sub_mul(mul_term(p1, p2.hc(), u1), p1.hc(), u2, p2);
  return {std::move(u1), std::move(u2), std::move(s)};
}

template <class Field>
auto PolyRing<Field>::top_reduce(const Poly& p, std::span<const Poly> reducers) const -> Poly {
  Poly work = p;
  while (!work.is_zero()) {
    auto it = std::find_if(reducers.begin(), reducers.end(), [&](const Poly& g) {
      return !g.is_zero() && g.ht().divides(work.ht());
    });
    if (it == reducers.end()) break;
    work = sub_mul(work, field_.div(work.hc(), it->hc()), work.ht() / it->ht(), *it);
  }
  return monic(work);
}

template <class Field>
auto PolyRing<Field>::normal_form(const Poly& p, std::span<const Poly> reducers,
                                  const StepObserver& observe) const -> Poly {
  std::vector<Term<Field>> remainder;
  Poly work = p;
  while (!work.is_zero()) {
    std::size_t pos = 0;
    for (; pos < reducers.size(); ++pos) {
      const Poly& g = reducers[pos];
      if (!g.is_zero() && g.ht().divides(work.ht())) break;
    }
    if (pos == reducers.size()) {
      remainder.push_back(work.head());
      work = work.lot();
      continue;
    }
    const Poly& g = reducers[pos];
    Element c = field_.div(work.hc(), g.hc());
    Monomial m = work.ht() / g.ht();
    if (observe) observe(pos, c, m);
    work = sub_mul(work, c, m, g);
  }
  return Poly(std::move(remainder));
}

template <class Field>
std::string PolyRing<Field>::to_string(const Poly& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = field_.is_negative(t.coeff);
    Element mag = negative ? field_.neg(t.coeff) : t.coeff;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (t.mono.is_one()) {
      out += field_.to_string(mag);
    } else {
      if (!field_.is_one(mag)) out += field_.to_string(mag) + "*";
      out += to_string(t.mono);
    }
  }
  return out;
}

template class PolyRing<RationalField>;
template class PolyRing<PrimeField>;

}  // namespace f5
