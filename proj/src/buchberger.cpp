#include "f5/buchberger.hpp"

#include <algorithm>
#include <stdexcept>

namespace f5 {

std::string fate_name(PairFate fate) {
  switch (fate) {
    case PairFate::product: return "product";
    case PairFate::chain: return "chain";
    case PairFate::zero: return "zero";
    case PairFate::added: return "added";
  }
  return "?";
}

namespace {

template <class Field>
class GMRun {
 public:
  using Poly = Polynomial<Field>;

  GMRun(const PolyRing<Field>& ring, const BuchbergerOptions& options) : ring_(ring), opts_(options) {}

  BuchbergerResult<Field> run(std::span<const Poly> generators) {
    if (generators.empty()) throw std::domain_error("empty generator list");
    for (const Poly& f : generators)
      if (f.is_zero()) throw std::domain_error("zero generator");
    for (const Poly& f : generators) add(ring_.monic(f));

    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& x, const Pair& y) {
        auto c = ring_.order().compare(x.lcm, y.lcm);
        return c != 0 ? c < 0 : x.serial < y.serial;
      });
      Pair p = *it;
      pairs_.erase(it);
      Poly s = ring_.spol(polys_[p.a], polys_[p.b]).s;
      Poly h = ring_.normal_form(s, current_, [&](std::size_t, const auto&, const Monomial&) {
        ++result_.stats.reduction_steps;
      });
      if (h.is_zero()) {
        ++result_.stats.reductions_to_zero;
        result_.log.push_back({p.a, p.b, PairFate::zero});
        continue;
      }
      result_.log.push_back({p.a, p.b, PairFate::added});
      add(ring_.monic(h));
    }
    for (std::size_t g : basis_) result_.basis.push_back(polys_[g]);
    result_.stats.basis_size = result_.basis.size();
    return std::move(result_);
  }

 private:
  struct Pair {
    std::size_t a;
    std::size_t b;
    Monomial lcm;
    std::size_t serial;
  };

  const Monomial& ht(std::size_t k) const { return polys_[k].ht(); }

  void push_pair(std::size_t a, std::size_t b) {
    pairs_.push_back({a, b, lcm(ht(a), ht(b)), serial_++});
  }

  void drop(std::size_t a, std::size_t b, PairFate fate) {
    if (fate == PairFate::product)
      ++result_.stats.rejected_product;
    else
      ++result_.stats.rejected_chain;
    result_.log.push_back({a, b, fate});
  }

  void add(Poly p) {
    const std::size_t h = polys_.size();
    polys_.push_back(std::move(p));
    result_.stats.pairs_created += basis_.size();
    if (result_.stats.pairs_created > opts_.max_pairs)
      throw std::runtime_error("pair limit of " + std::to_string(opts_.max_pairs) + " exceeded");

    if (!opts_.gebauer_moeller) {
      for (std::size_t g : basis_) push_pair(g, h);
      basis_.push_back(h);
      current_.push_back(polys_[h]);
      return;
    }

    const Monomial& hh = ht(h);
    // New pairs (g, h): drop those whose lcm is a proper multiple of
    // another new pair's lcm, keeping coprime ones for the next filter.
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      std::size_t g1 = basis_[k];
      Monomial l1 = lcm(hh, ht(g1));
      bool keep = coprime(hh, ht(g1));
      if (!keep) {
        auto divides_l1 = [&](std::size_t g2) { return lcm(hh, ht(g2)).divides(l1); };
        keep = std::none_of(basis_.begin() + static_cast<std::ptrdiff_t>(k) + 1, basis_.end(), divides_l1) &&
               std::none_of(kept.begin(), kept.end(), divides_l1);
      }
      if (keep)
        kept.push_back(g1);
      else
        drop(g1, h, PairFate::chain);
    }
    std::vector<Pair> fresh;
    for (std::size_t g : kept) {
      if (coprime(hh, ht(g))) {
        drop(g, h, PairFate::product);
        continue;
      }
      fresh.push_back({g, h, lcm(ht(g), hh), 0});
    }

    // Old pairs whose lcm h's head divides strictly.
    std::vector<Pair> old;
    for (Pair& q : pairs_) {
      if (hh.divides(q.lcm) && !(lcm(ht(q.a), hh) == q.lcm) && !(lcm(hh, ht(q.b)) == q.lcm))
        drop(q.a, q.b, PairFate::chain);
      else
        old.push_back(std::move(q));
    }
    pairs_ = std::move(old);
    for (Pair& q : fresh) {
      q.serial = serial_++;
      pairs_.push_back(std::move(q));
    }

    std::vector<std::size_t> next;
    for (std::size_t g : basis_)
      if (!hh.divides(ht(g))) next.push_back(g);
    next.push_back(h);
    basis_ = std::move(next);
    current_.clear();
    for (std::size_t g : basis_) current_.push_back(polys_[g]);
  }

  const PolyRing<Field>& ring_;
  BuchbergerOptions opts_;
  std::vector<Poly> polys_;
  std::vector<std::size_t> basis_;
  std::vector<Poly> current_;
  std::vector<Pair> pairs_;
  std::size_t serial_ = 0;
  BuchbergerResult<Field> result_;
};

}  // namespace

template <class Field>
BuchbergerResult<Field> buchberger_basis(std::span<const Polynomial<Field>> generators,
                                         const PolyRing<Field>& ring, const BuchbergerOptions& options) {
  return GMRun<Field>(ring, options).run(generators);
}

template <class Field>
std::vector<Polynomial<Field>> reduced_basis(std::span<const Polynomial<Field>> basis,
                                             const PolyRing<Field>& ring) {
  using Poly = Polynomial<Field>;
  std::vector<Poly> g;
  for (const Poly& p : basis)
    if (!p.is_zero()) g.push_back(ring.monic(p));
  // Drop elements whose head is a multiple of another head (ties: keep the first).
  std::vector<Poly> minimal;
  for (std::size_t k = 0; k < g.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < g.size() && !redundant; ++l) {
      if (l == k || !g[l].ht().divides(g[k].ht())) continue;
      redundant = !(g[l].ht() == g[k].ht()) || l < k;
    }
    if (!redundant) minimal.push_back(g[k]);
  }
  std::vector<Poly> out;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    Poly head = ring.term(minimal[k].hc(), minimal[k].ht());
    std::vector<Poly> others(minimal.begin(), minimal.end());
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(k));
    Poly tail = ring.normal_form(minimal[k].lot(), others);
    out.push_back(ring.add(head, tail));
  }
  std::sort(out.begin(), out.end(),
            [&](const Poly& a, const Poly& b) { return ring.order().less(a.ht(), b.ht()); });
  return out;
}

template <class Field>
bool ideal_equal(std::span<const Polynomial<Field>> a, std::span<const Polynomial<Field>> b,
                 const PolyRing<Field>& ring) {
  return reduced_basis(a, ring) == reduced_basis(b, ring);
}

template <class Field>
bool is_groebner(std::span<const Polynomial<Field>> basis, const PolyRing<Field>& ring) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!ring.normal_form(ring.spol(basis[i], basis[j]).s, basis).is_zero()) return false;
  return true;
}

#define F5_INSTANTIATE_BUCHBERGER(F)                                                              \
  template BuchbergerResult<F> buchberger_basis(std::span<const Polynomial<F>>, const PolyRing<F>&, \
                                                const BuchbergerOptions&);                        \
  template std::vector<Polynomial<F>> reduced_basis(std::span<const Polynomial<F>>,               \
                                                    const PolyRing<F>&);                          \
  template bool ideal_equal(std::span<const Polynomial<F>>, std::span<const Polynomial<F>>,       \
                            const PolyRing<F>&);                                                  \
  template bool is_groebner(std::span<const Polynomial<F>>, const PolyRing<F>&);

F5_INSTANTIATE_BUCHBERGER(RationalField)
F5_INSTANTIATE_BUCHBERGER(PrimeField)

}  // namespace f5
