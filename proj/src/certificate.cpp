#include "f5/certificate.hpp"

#include <map>

namespace f5 {

template <class Field>
bool Certificate<Field>::valid() const {
  if (!evaluation.is_zero() || !heads_cancel) return false;
  if (rewriter_signature && !(*rewriter_signature == bound)) return false;
  for (const auto& e : entries)
    if (!e.ok) return false;
  return true;
}

namespace {

template <class Field>
class CertificateBuilder {
 public:
  using Element = typename Field::Element;

  CertificateBuilder(const BasisState<Field>& state, const PolyRing<Field>& ring)
      : st_(state), ring_(ring), K_(ring.field()) {}

  Certificate<Field> build(const Rejection& rejection) {
    if (!st_.witnesses) throw CertificatePrecondition("certificates need a run with witnesses");
    if (rejection.criterion == Criterion::collision || rejection.components.empty())
      throw CertificatePrecondition("signature collisions carry no certificate");

    Certificate<Field> cert;
    cert.rejection = rejection;
    const ComponentVerdict& verdict = rejection.components.front();
    const CriticalPair& pair = rejection.pair;
    const std::size_t k = pair.position(verdict.side);
    const Monomial& u = pair.multiplier(verdict.side);
    cert.component = k;
    cert.multiplier = u;
    cert.bound = sig_mul(u, st_.at(k).sig);
    const std::size_t m = st_.generators;

    ModuleVector<Field> s_k;
    Element sc_k = K_.one();
    if (k > m) {
      s_k = witness(k);
      s_k.add_entry(ring_, k, ring_.constant(K_.neg(K_.one())));
      sc_k = signature_coeff(k);
    }

    ModuleVector<Field> s_a;
    Element sc_a;
    std::map<std::size_t, Element> designated;
    if (rejection.criterion == Criterion::f5) {
      std::size_t prev = verdict.witnesses.front();
      const Polynomial<Field>& p_prev = st_.at(prev).poly;
      cert.source = prev;
      cert.lambda = cert.bound.gamma / p_prev.ht();
      s_a = principal_syzygy(prev, cert.bound.index, st_.basis(), ring_);
      sc_a = p_prev.hc();
    } else {
      const RewriteRule& rule = *verdict.rule;
      const LabelRecord<Field>& label = st_.labels.at(rule.label);
      cert.lambda = cert.bound.gamma / rule.gamma;
      if (label.status == LabelStatus::basis) {
        std::size_t rew = label.position;
        cert.source = rew;
        s_a = witness(rew);
        s_a.add_entry(ring_, rew, ring_.constant(K_.neg(K_.one())));
        sc_a = signature_coeff(rew);
        cert.rewriter_signature = sig_mul(cert.lambda, st_.at(rew).sig);
        designated[rew] = K_.neg(sc_k);
      } else if (label.status == LabelStatus::zero) {
        if (!label.syzygy) throw CertificatePrecondition("rewriting syzygy has no witness");
        s_a = *label.syzygy;
        sc_a = signature_coefficient(s_a, label.sig, st_.basis(), m, ring_);
      } else {
        throw CertificatePrecondition("rewriting rule points to an unresolved label");
      }
    }
    designated[k] = sc_a;

    ModuleVector<Field> lhs = s_a.scaled(ring_, sc_k, cert.lambda);
    ModuleVector<Field> rhs = s_k.scaled(ring_, sc_a, u);
    cert.heads_cancel = !lhs.is_zero() && mht(lhs, st_.basis(), ring_) == cert.bound &&
                        (rhs.is_zero() || mht(rhs, st_.basis(), ring_) == cert.bound);

    ModuleVector<Field> d = lhs;
    d.add_scaled(ring_, K_.neg(K_.one()), ring_.one_monomial(), rhs);

    // Push every non-input entry reaching the bound, beyond the designated
    // coefficient, down through its witness.
    for (std::size_t pos = st_.size(); pos > m; --pos) {
      const Polynomial<Field>* a = d.at(pos);
      if (!a) continue;
      std::vector<Term<Field>> excess;
      for (const auto& t : a->terms()) {
        auto cmp = sig_compare(sig_mul(t.mono, st_.at(pos).sig), cert.bound, ring_.order());
        if (cmp < 0) break;
        Element c = t.coeff;
        if (cmp == 0) {
          auto it = designated.find(pos);
          if (it != designated.end()) c = K_.sub(c, it->second);
        }
        if (!K_.is_zero(c)) excess.push_back({t.mono, c});
      }
      if (excess.empty()) continue;
      Polynomial<Field> e(std::move(excess));
      d.add_entry(ring_, pos, ring_.neg(e));
      for (const auto& t : e.terms()) d.add_scaled(ring_, t.coeff, t.mono, witness(pos));
    }

    cert.evaluation = evaluate(d, st_.basis(), ring_);
    for (const auto& [pos, a] : d.entries()) {
      CertificateEntry<Field> entry;
      entry.position = pos;
      entry.top = sig_mul(a.ht(), st_.at(pos).sig);
      entry.ok = true;
      for (const auto& t : a.terms()) {
        auto cmp = sig_compare(sig_mul(t.mono, st_.at(pos).sig), cert.bound, ring_.order());
        if (cmp < 0) break;
        auto it = designated.find(pos);
        if (cmp > 0 || it == designated.end() || !(t.coeff == it->second)) entry.ok = false;
        entry.designated = true;
      }
      cert.entries.push_back(std::move(entry));
    }
    // The flagged component itself must survive at the bound.
    for (const auto& [pos, c] : designated) {
      bool present = false;
      for (const auto& e : cert.entries) present |= e.position == pos && e.designated && e.ok;
      if (!present && !K_.is_zero(c)) {
        CertificateEntry<Field> missing;
        missing.position = pos;
        missing.top = cert.bound;
        missing.designated = true;
        cert.entries.push_back(std::move(missing));
      }
    }
    cert.syzygy = std::move(d);
    if (!cert.valid())
      throw CertificateInvalid("certificate check failed for pair " + pair_label(pair) + ":\n" +
                               render_certificate(cert, ring_));
    return cert;
  }

 private:
  const ModuleVector<Field>& witness(std::size_t pos) const {
    const auto& w = st_.at(pos).witness;
    if (!w) throw CertificatePrecondition("position " + std::to_string(pos) + " has no witness");
    return *w;
  }

  Element signature_coeff(std::size_t pos) {
    if (pos <= st_.generators) return K_.one();
    auto it = sc_cache_.find(pos);
    if (it != sc_cache_.end()) return it->second;
    Element c = signature_coefficient(witness(pos), st_.at(pos).sig, st_.basis(), st_.generators, ring_);
    if (K_.is_zero(c))
      throw CertificateInvalid("witness of position " + std::to_string(pos) +
                               " has no coefficient on its signature");
    sc_cache_.emplace(pos, c);
    return c;
  }

  const BasisState<Field>& st_;
  const PolyRing<Field>& ring_;
  const Field& K_;
  std::map<std::size_t, Element> sc_cache_;
};

}  // namespace

template <class Field>
Certificate<Field> certify_rejection(const Rejection& rejection, const BasisState<Field>& state,
                                     const PolyRing<Field>& ring) {
  return CertificateBuilder<Field>(state, ring).build(rejection);
}

template <class Field>
std::string render_certificate(const Certificate<Field>& cert, const PolyRing<Field>& ring) {
  auto names = ring.names();
  const Rejection& r = cert.rejection;
  std::string out = "certificate pair=" + pair_label(r.pair) + " criterion=" + criterion_name(r.criterion) +
                    " component=" + std::to_string(cert.component) +
                    " mult=" + to_string(cert.multiplier, names) +
                    " bound=" + to_string(cert.bound, names) + "\n";
  out += "  source: ";
  out += cert.source ? "r" + std::to_string(cert.source) : std::string("syzygy");
  out += " lambda=" + to_string(cert.lambda, names) + "\n";
  out += "  syzygy: " + cert.syzygy.to_string(ring) + "\n";
  out += "  evaluation: " + ring.to_string(cert.evaluation) + "\n";
  for (const auto& e : cert.entries) {
    out += "  entry e" + std::to_string(e.position) + ": top=" + to_string(e.top, names) +
           (e.designated ? " at bound" : " below bound") + (e.ok ? " ok" : " FAIL") + "\n";
  }
  out += std::string("  heads-cancel: ") + (cert.heads_cancel ? "yes" : "no") + "\n";
  if (cert.rewriter_signature)
    out += "  rewriter-signature: " + to_string(*cert.rewriter_signature, names) + "\n";
  out += std::string("  valid: ") + (cert.valid() ? "yes" : "no") + "\n";
  return out;
}

template <class Field>
std::vector<std::size_t> unsound_rejections(const BasisState<Field>& state, const PolyRing<Field>& ring) {
  std::vector<Polynomial<Field>> basis = state.polynomials();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < state.rejections.size(); ++k) {
    const Rejection& r = state.rejections[k];
    if (r.criterion == Criterion::collision) continue;
    auto s = ring.spol(state.at(r.pair.i).poly, state.at(r.pair.j).poly).s;
    if (!ring.top_reduce(s, basis).is_zero()) out.push_back(k);
  }
  return out;
}

#define F5_INSTANTIATE_CERTIFICATE(F)                                                             \
  template struct Certificate<F>;                                                                 \
  template Certificate<F> certify_rejection(const Rejection&, const BasisState<F>&,               \
                                            const PolyRing<F>&);                                  \
  template std::string render_certificate(const Certificate<F>&, const PolyRing<F>&);             \
  template std::vector<std::size_t> unsound_rejections(const BasisState<F>&, const PolyRing<F>&);

F5_INSTANTIATE_CERTIFICATE(RationalField)
F5_INSTANTIATE_CERTIFICATE(PrimeField)

}  // namespace f5
