#include "f5/f5_engine.hpp"

#include <algorithm>

namespace f5 {

std::string pair_label(const CriticalPair& pair) {
  return "(" + std::to_string(pair.i) + "," + std::to_string(pair.j) + ")";
}

std::string criterion_name(Criterion c) {
  switch (c) {
    case Criterion::f5: return "f5crit";
    case Criterion::rewritten: return "rewrite";
    case Criterion::collision: return "collision";
  }
  return "?";
}

template <class Field>
std::vector<Polynomial<Field>> BasisState<Field>::polynomials() const {
  std::vector<Polynomial<Field>> out;
  out.reserve(elements.size());
  for (const auto& r : elements) out.push_back(r.poly);
  return out;
}

template <class Field>
std::vector<std::size_t> f5_witnesses(const Monomial& u, std::size_t pos,
                                      const BasisState<Field>& state, bool first_only) {
  const LabeledPoly<Field>& r = state.at(pos);
  Monomial target = u * r.sig.gamma;
  std::vector<std::size_t> out;
  for (std::size_t q = 1; q <= state.size(); ++q) {
    const LabeledPoly<Field>& prev = state.at(q);
    if (prev.sig.index <= r.sig.index || !prev.poly.ht().divides(target)) continue;
    out.push_back(q);
    if (first_only) break;
  }
  return out;
}

template <class Field>
std::optional<RewriteRule> rewriting_rule(const Monomial& u, std::size_t pos,
                                          const BasisState<Field>& state) {
  const LabeledPoly<Field>& r = state.at(pos);
  const std::optional<std::size_t>& own = state.element_label.at(pos - 1);
  Monomial target = u * r.sig.gamma;
  const auto& rules = state.rules.at(r.sig.index);
  for (auto it = rules.rbegin(); it != rules.rend(); ++it) {
    if (own && it->label == *own) return std::nullopt;
    if (it->gamma.divides(target)) return *it;
  }
  return std::nullopt;
}

template <class Field>
NormalizedVerdict is_normalized(const CriticalPair& pair, const BasisState<Field>& state) {
  NormalizedVerdict out;
  for (Side side : {Side::i, Side::j}) {
    auto ws = f5_witnesses(pair.multiplier(side), pair.position(side), state);
    if (!ws.empty()) out.components.push_back({side, std::move(ws), std::nullopt});
  }
  if (!out.components.empty()) {
    out.normalized = false;
    out.witness = out.components.front().witnesses.front();
  }
  return out;
}

template <class Field>
RewriteVerdict is_rewritable(const CriticalPair& pair, const BasisState<Field>& state) {
  RewriteVerdict out;
  for (Side side : {Side::i, Side::j}) {
    if (auto rule = rewriting_rule(pair.multiplier(side), pair.position(side), state))
      out.components.push_back({side, {}, std::move(rule)});
  }
  out.rewritable = !out.components.empty();
  return out;
}

template <class Field>
TopReductionResult<Field> top_reduction_signed(LabeledPoly<Field> r, const BasisState<Field>& state,
                                               const PolyRing<Field>& ring) {
  using Poly = Polynomial<Field>;
  const Field& K = ring.field();
  TopReductionResult<Field> out;

  std::vector<std::size_t> higher, current;
  for (std::size_t q = 1; q <= state.size(); ++q) {
    std::size_t idx = state.index_of(q);
    if (idx > state.current_index)
      higher.push_back(q);
    else if (idx == state.current_index)
      current.push_back(q);
  }

  auto subtract = [&](std::size_t q, const typename Field::Element& c, const Monomial& m) {
    r.poly = ring.sub_mul(r.poly, c, m, state.at(q).poly);
    if (r.witness) r.witness->add_entry(ring, q, ring.term(K.neg(c), m));
    ++out.steps;
  };

  for (;;) {
    // Full reduction by the elements of larger index never touches the signature.
    Poly p = std::move(r.poly);
    std::vector<Term<Field>> rest;
    r.poly = Poly();
    while (!p.is_zero()) {
      const Term<Field>& h = p.head();
      auto it = std::find_if(higher.begin(), higher.end(),
                             [&](std::size_t q) { return state.at(q).poly.ht().divides(h.mono); });
      if (it == higher.end()) {
        rest.push_back(h);
        p = p.lot();
        continue;
      }
      const Poly& g = state.at(*it).poly;
      typename Field::Element c = K.div(h.coeff, g.hc());
      Monomial m = h.mono / g.ht();
      p = ring.sub_mul(p, c, m, g);
      if (r.witness) r.witness->add_entry(ring, *it, ring.term(K.neg(c), m));
      ++out.steps;
    }
    r.poly = Poly(std::move(rest));

    if (r.poly.is_zero()) {
      out.kind = TopReductionResult<Field>::Kind::zero;
      out.element = std::move(r);
      return out;
    }

    std::size_t chosen = 0;
    Monomial u;
    Signature s;
    for (std::size_t q : current) {
      const LabeledPoly<Field>& red = state.at(q);
      if (!red.poly.ht().divides(r.poly.ht())) continue;
      Monomial uq = r.poly.ht() / red.poly.ht();
      Signature sq = sig_mul(uq, red.sig);
      if (sq == r.sig) continue;
      if (rewriting_rule(uq, q, state)) continue;
      if (!f5_witnesses(uq, q, state, true).empty()) continue;
      chosen = q;
      u = std::move(uq);
      s = std::move(sq);
      break;
    }

    if (chosen == 0) {
      typename Field::Element c = K.inv(r.poly.hc());
      r.poly = ring.scale(r.poly, c);
      if (r.witness) *r.witness = r.witness->scaled(ring, c, ring.one_monomial());
      out.kind = TopReductionResult<Field>::Kind::reduced;
      out.element = std::move(r);
      return out;
    }

    const LabeledPoly<Field>& red = state.at(chosen);
    if (sig_less(s, r.sig, ring.order())) {
      subtract(chosen, K.div(r.poly.hc(), red.poly.hc()), u);
      continue;
    }

    // The reductor multiple has the larger signature: it becomes a new
    // S-polynomial and r goes back unchanged.
    LabeledPoly<Field> spawned;
    spawned.sig = s;
    spawned.poly =
        ring.sub_mul(ring.mul_term(red.poly, r.poly.hc(), u), red.poly.hc(), ring.one_monomial(), r.poly);
    if (r.witness) {
      ModuleVector<Field> w;
      w.add_entry(ring, chosen, ring.term(r.poly.hc(), u));
      w.add_scaled(ring, K.neg(red.poly.hc()), ring.one_monomial(), *r.witness);
      spawned.witness = std::move(w);
    }
    out.kind = TopReductionResult<Field>::Kind::split;
    out.reductor = chosen;
    out.multiplier = std::move(u);
    out.spawned = std::move(spawned);
    out.element = std::move(r);
    return out;
  }
}

namespace {

template <class Field>
class F5Run {
 public:
  F5Run(const PolyRing<Field>& ring, const EngineOptions<Field>& options)
      : ring_(ring), opts_(options) {}

  F5Result<Field> run(std::span<const Polynomial<Field>> generators) {
    if (generators.empty()) throw std::domain_error("empty generator list");
    const std::size_t m = generators.size();
    st_.generators = m;
    st_.witnesses = opts_.witnesses;
    st_.rules.resize(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
      if (generators[i].is_zero())
        throw std::domain_error("input polynomial " + std::to_string(i + 1) + " is zero");
      LabeledPoly<Field> r;
      r.sig = {ring_.one_monomial(), i + 1};
      r.poly = ring_.monic(generators[i]);
      if (opts_.witnesses) r.witness = ModuleVector<Field>::unit(i + 1, ring_);
      if (ring_.is_constant(r.poly)) st_.unit_ideal = true;
      st_.elements.push_back(std::move(r));
      st_.element_label.push_back(std::nullopt);
    }

    for (std::size_t idx = m; idx >= 1 && !st_.unit_ideal; --idx) {
      st_.current_index = idx;
      emit(EventKind::index, "INDEX i=" + std::to_string(idx));
      queue_.clear();
      for (std::size_t pos = 1; pos <= st_.size(); ++pos)
        if (pos != idx && st_.index_of(pos) > idx) make_pair(idx, pos);
      while (!queue_.empty() && !st_.unit_ideal) {
        std::vector<CriticalPair> batch = pop_lowest_degree();
        std::vector<Pending> todo = spols(batch);
        std::vector<std::size_t> done = reduction(std::move(todo));
        if (st_.unit_ideal) break;
        for (std::size_t k : done)
          for (std::size_t pos = 1; pos < k; ++pos)
            if (st_.index_of(pos) >= idx) make_pair(k, pos);
      }
    }
    if (st_.unit_ideal) st_.current_index = 1;
    st_.stats.basis_size = st_.size();
    return {std::move(st_), std::move(trace_)};
  }

 private:
  struct Pending {
    std::size_t label;
    LabeledPoly<Field> lp;
  };

  std::string sig_str(const Signature& s) const { return to_string(s, ring_.names()); }
  std::string mono_str(const Monomial& m) const { return to_string(m, ring_.names()); }

  void emit(EventKind kind, std::string text) {
    if (opts_.trace) trace_.push_back({kind, std::move(text)});
  }

  void make_pair(std::size_t a, std::size_t b) {
    const LabeledPoly<Field>& ra = st_.at(a);
    const LabeledPoly<Field>& rb = st_.at(b);
    CriticalPair p;
    p.lcm = lcm(ra.poly.ht(), rb.poly.ht());
    Monomial ua = p.lcm / ra.poly.ht();
    Monomial ub = p.lcm / rb.poly.ht();
    Signature sa = sig_mul(ua, ra.sig);
    Signature sb = sig_mul(ub, rb.sig);
    if (sig_less(sa, sb, ring_.order())) {
      std::swap(a, b);
      std::swap(ua, ub);
      std::swap(sa, sb);
    }
    p.i = a;
    p.j = b;
    p.u_i = std::move(ua);
    p.u_j = std::move(ub);
    p.sig = std::move(sa);
    p.sig_j = std::move(sb);
    p.degree = p.lcm.degree();
    p.serial = st_.pairs.size();
    st_.pairs.push_back(p);
    ++st_.stats.pairs_created;
    if (st_.pairs.size() > opts_.max_pairs)
      throw EngineError("pair limit of " + std::to_string(opts_.max_pairs) + " exceeded");
    emit(EventKind::pair, "PAIR d=" + std::to_string(p.degree) + " sig=" + sig_str(p.sig) + " " +
                              pair_label(p));
    if (opts_.on_pair_created) opts_.on_pair_created(p, st_);

    if (p.sig == p.sig_j) {
      ++st_.stats.rejected_collision;
      st_.rejections.push_back({p, Criterion::collision, {}, true, st_.current_index});
      emit(EventKind::reject, "REJECT collision pair=" + pair_label(p) + " sig=" + sig_str(p.sig));
      return;
    }
    if (opts_.criteria_at_creation && rejected(p, true)) return;
    queue_.push_back(std::move(p));
  }

  std::string rule_target(const RewriteRule& rule) const {
    const LabelRecord<Field>& l = st_.labels.at(rule.label);
    switch (l.status) {
      case LabelStatus::basis: return std::to_string(l.position);
      case LabelStatus::zero: return "syz" + std::to_string(rule.label);
      case LabelStatus::pending: break;
    }
    return "pending" + std::to_string(rule.label);
  }

  bool rejected(const CriticalPair& p, bool at_creation) {
    Criterion criterion;
    std::vector<ComponentVerdict> components;
    if (auto nv = is_normalized(p, st_); !nv.normalized) {
      criterion = Criterion::f5;
      components = std::move(nv.components);
      ++st_.stats.rejected_f5;
    } else if (auto rv = is_rewritable(p, st_); rv.rewritable) {
      criterion = Criterion::rewritten;
      components = std::move(rv.components);
      ++st_.stats.rejected_rewritten;
    } else {
      return false;
    }
    if (opts_.trace) {
      const char* when = at_creation ? " at=creation" : " at=selection";
      for (const ComponentVerdict& c : components) {
        std::string text = "REJECT " + criterion_name(criterion) + " pair=" + pair_label(p) +
                           " comp=" + std::to_string(p.position(c.side)) +
                           " mult=" + mono_str(p.multiplier(c.side)) +
                           " sig=" + sig_str(p.signature(c.side));
        if (criterion == Criterion::f5) {
          text += " witness=" + std::to_string(c.witnesses.front()) + " all=";
          for (std::size_t k = 0; k < c.witnesses.size(); ++k)
            text += (k ? "," : "") + std::to_string(c.witnesses[k]);
        } else {
          text += " rule=" + rule_target(*c.rule);
        }
        emit(EventKind::reject, text + when);
      }
    }
    st_.rejections.push_back({p, criterion, std::move(components), at_creation, st_.current_index});
    return true;
  }

  std::vector<CriticalPair> pop_lowest_degree() {
    std::uint64_t d = std::min_element(queue_.begin(), queue_.end(), [](const auto& a, const auto& b) {
                        return a.degree < b.degree;
                      })->degree;
    auto split = std::stable_partition(queue_.begin(), queue_.end(),
                                       [d](const CriticalPair& p) { return p.degree != d; });
    std::vector<CriticalPair> batch(std::make_move_iterator(split), std::make_move_iterator(queue_.end()));
    queue_.erase(split, queue_.end());
    std::sort(batch.begin(), batch.end(), [&](const CriticalPair& a, const CriticalPair& b) {
      auto c = sig_compare(a.sig, b.sig, ring_.order());
      return c != 0 ? c < 0 : a.serial < b.serial;
    });
    return batch;
  }

  std::size_t new_label(const Signature& sig) {
    std::size_t id = st_.labels.size();
    st_.labels.push_back({sig, LabelStatus::pending, 0, std::nullopt});
    auto& rules = st_.rules.at(sig.index);
    if (!rules.empty() && ring_.order().less(sig.gamma, rules.back().gamma)) {
      ++st_.stats.signature_inversions;
      emit(EventKind::order, "ORDER index=" + std::to_string(sig.index) + " sig=" + sig_str(sig) +
                                 " after=" + mono_str(rules.back().gamma) + "*e" +
                                 std::to_string(sig.index));
    }
    rules.push_back({sig.gamma, sig.index, id});
    return id;
  }

  void resolve_zero(std::size_t label, std::optional<ModuleVector<Field>> syzygy) {
    LabelRecord<Field>& l = st_.labels.at(label);
    l.status = LabelStatus::zero;
    l.syzygy = std::move(syzygy);
    if (opts_.verify_witnesses && l.syzygy) {
      ++st_.stats.witness_checks;
      if (!evaluate(*l.syzygy, st_.basis(), ring_).is_zero())
        throw EngineError("syzygy witness of " + sig_str(l.sig) + " does not evaluate to zero");
    }
    ++st_.stats.reductions_to_zero;
    emit(EventKind::zero, "ZERO sig=" + sig_str(l.sig));
  }

  void verify(const LabeledPoly<Field>& r) {
    if (!opts_.verify_witnesses || !r.witness) return;
    ++st_.stats.witness_checks;
    if (!(evaluate(*r.witness, st_.basis(), ring_) == r.poly))
      throw EngineError("witness of " + sig_str(r.sig) + " does not evaluate to its polynomial");
    if (!(mht(*r.witness, st_.basis(), ring_) == r.sig))
      throw EngineError("witness of " + sig_str(r.sig) + " has module head term " +
                        sig_str(mht(*r.witness, st_.basis(), ring_)));
  }

  std::vector<Pending> spols(const std::vector<CriticalPair>& batch) {
    const Field& K = ring_.field();
    std::vector<Pending> todo;
    for (const CriticalPair& p : batch) {
      if (opts_.criteria_on_selection && rejected(p, false)) continue;
      const LabeledPoly<Field>& ri = st_.at(p.i);
      const LabeledPoly<Field>& rj = st_.at(p.j);
      LabeledPoly<Field> s;
      s.sig = p.sig;
      s.poly = ring_.sub_mul(ring_.mul_term(ri.poly, rj.poly.hc(), p.u_i), ri.poly.hc(), p.u_j, rj.poly);
      if (opts_.witnesses) {
        ModuleVector<Field> w;
        w.add_entry(ring_, p.i, ring_.term(rj.poly.hc(), p.u_i));
        w.add_entry(ring_, p.j, ring_.term(K.neg(ri.poly.hc()), p.u_j));
        s.witness = std::move(w);
      }
      std::size_t label = new_label(s.sig);
      if (s.poly.is_zero()) {
        resolve_zero(label, std::move(s.witness));
        continue;
      }
      verify(s);
      todo.push_back({label, std::move(s)});
    }
    return todo;
  }

  std::vector<std::size_t> reduction(std::vector<Pending> todo) {
    std::vector<std::size_t> done;
    while (!todo.empty()) {
      auto it = std::min_element(todo.begin(), todo.end(), [&](const Pending& a, const Pending& b) {
        auto c = sig_compare(a.lp.sig, b.lp.sig, ring_.order());
        return c != 0 ? c < 0 : a.label < b.label;
      });
      Pending h = std::move(*it);
      todo.erase(it);
      Signature sig = h.lp.sig;
      auto res = top_reduction_signed(std::move(h.lp), st_, ring_);
      st_.stats.reduction_steps += res.steps;
      if (res.steps > 0)
        emit(EventKind::reduce, "REDUCE sig=" + sig_str(sig) + " steps=" + std::to_string(res.steps));
      switch (res.kind) {
        case TopReductionResult<Field>::Kind::zero:
          resolve_zero(h.label, std::move(res.element.witness));
          break;
        case TopReductionResult<Field>::Kind::reduced:
          verify(res.element);
          done.push_back(add_element(h.label, std::move(res.element)));
          if (st_.unit_ideal) return done;
          break;
        case TopReductionResult<Field>::Kind::split: {
          ++st_.stats.splits;
          LabeledPoly<Field> spawned = std::move(*res.spawned);
          emit(EventKind::split, "REDUCE split sig=" + sig_str(sig) + " by=" +
                                     std::to_string(res.reductor) + " mult=" + mono_str(res.multiplier) +
                                     " new=" + sig_str(spawned.sig));
          std::size_t label = new_label(spawned.sig);
          if (spawned.poly.is_zero()) {
            resolve_zero(label, std::move(spawned.witness));
          } else {
            verify(spawned);
            todo.push_back({label, std::move(spawned)});
          }
          verify(res.element);
          todo.push_back({h.label, std::move(res.element)});
          break;
        }
      }
    }
    return done;
  }

  std::size_t add_element(std::size_t label, LabeledPoly<Field> r) {
    if (st_.size() >= opts_.max_basis_size)
      throw EngineError("basis size limit of " + std::to_string(opts_.max_basis_size) + " exceeded");
    std::size_t pos = st_.size() + 1;
    emit(EventKind::new_element, "NEW pos=" + std::to_string(pos) + " sig=" + sig_str(r.sig) +
                                     " ht=" + mono_str(r.poly.ht()));
    if (ring_.is_constant(r.poly)) st_.unit_ideal = true;
    st_.elements.push_back(std::move(r));
    st_.element_label.push_back(label);
    st_.labels.at(label).status = LabelStatus::basis;
    st_.labels.at(label).position = pos;
    return pos;
  }

  const PolyRing<Field>& ring_;
  const EngineOptions<Field>& opts_;
  BasisState<Field> st_;
  std::vector<TraceEvent> trace_;
  std::vector<CriticalPair> queue_;
};

}  // namespace

template <class Field>
F5Result<Field> incremental_basis(std::span<const Polynomial<Field>> generators,
                                  const PolyRing<Field>& ring, const EngineOptions<Field>& options) {
  return F5Run<Field>(ring, options).run(generators);
}

template <class Field>
std::vector<Polynomial<Field>> interreduce(std::span<const Polynomial<Field>> basis,
                                           const PolyRing<Field>& ring) {
  using Poly = Polynomial<Field>;
  const MonomialOrder& ord = ring.order();
  auto by_head = [&](const Poly& a, const Poly& b) { return ord.less(a.ht(), b.ht()); };

  std::vector<Poly> out;
  for (const Poly& p : basis)
    if (!p.is_zero()) out.push_back(ring.monic(p));

  // Autoreduce until stable: each element is replaced by its normal form
  // modulo the others, and dropped when that is zero. On a Groebner basis
  // this is the reduced basis; elements sharing a head term are also
  // handled, so {x, x + y} becomes {x, y}.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k < out.size();) {
      std::vector<Poly> others;
      for (std::size_t l = 0; l < out.size(); ++l)
        if (l != k) others.push_back(out[l]);
      Poly r = ring.normal_form(out[k], others);
      if (r.is_zero()) {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(k));
        changed = true;
        continue;
      }
      r = ring.monic(r);
      if (!(r == out[k])) {
        out[k] = std::move(r);
        changed = true;
      }
      ++k;
    }
  }
  std::sort(out.begin(), out.end(), by_head);
  return out;
}

template <class Field>
std::vector<Polynomial<Field>> interreduce(const BasisState<Field>& state, const PolyRing<Field>& ring) {
  std::vector<Polynomial<Field>> polys = state.polynomials();
  return interreduce<Field>(std::span<const Polynomial<Field>>(polys), ring);
}

#define F5_INSTANTIATE_ENGINE(F)                                                                  \
  template struct BasisState<F>;                                                                  \
  template std::vector<std::size_t> f5_witnesses(const Monomial&, std::size_t,                    \
                                                 const BasisState<F>&, bool);                     \
  template std::optional<RewriteRule> rewriting_rule(const Monomial&, std::size_t,                \
                                                     const BasisState<F>&);                       \
  template NormalizedVerdict is_normalized(const CriticalPair&, const BasisState<F>&);            \
  template RewriteVerdict is_rewritable(const CriticalPair&, const BasisState<F>&);               \
  template TopReductionResult<F> top_reduction_signed(LabeledPoly<F>, const BasisState<F>&,       \
                                                      const PolyRing<F>&);                        \
  template F5Result<F> incremental_basis(std::span<const Polynomial<F>>, const PolyRing<F>&,      \
                                         const EngineOptions<F>&);                                \
  template std::vector<Polynomial<F>> interreduce(std::span<const Polynomial<F>>,                 \
                                                  const PolyRing<F>&);                            \
  template std::vector<Polynomial<F>> interreduce(const BasisState<F>&, const PolyRing<F>&);

F5_INSTANTIATE_ENGINE(RationalField)
F5_INSTANTIATE_ENGINE(PrimeField)

}  // namespace f5
