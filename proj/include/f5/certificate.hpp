#ifndef F5_CERTIFICATE_HPP
#define F5_CERTIFICATE_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "f5/f5_engine.hpp"

namespace f5 {

/// Witnesses are missing, or the rejection refers to a label that never
/// resolved.
class CertificatePrecondition : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The constructed syzygy fails one of its checks.
class CertificateInvalid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Field>
struct CertificateEntry {
  std::size_t position = 0;
  Signature top;  // largest module term of the entry
  bool designated = false;
  bool ok = false;
};

/// Syzygy witnessing that the flagged component u_k*r_k of a rejected pair
/// can be rewritten with strictly smaller signatures.
template <class Field>
struct Certificate {
  Rejection rejection;
  std::size_t component = 0;        // basis position k of the flagged component
  Monomial multiplier;              // u_k
  Signature bound;                  // u_k*Sig(r_k)
  Monomial lambda;                  // bound / Sig of the criterion's source
  std::size_t source = 0;           // r_prev (F5 criterion) or r_rew (rewritten, 0 for a syzygy rule)
  ModuleVector<Field> syzygy;
  Polynomial<Field> evaluation;
  std::vector<CertificateEntry<Field>> entries;
  bool heads_cancel = false;        // mht(lambda*s_A) = mht(u_k*s_k) before subtraction
  std::optional<Signature> rewriter_signature;  // lambda*Sig(r_rew)

  bool valid() const;
};

/// Builds and checks the certificate of the reported component of a
/// rejection. Requires a run with witnesses. Throws CertificateInvalid when
/// a check fails.
template <class Field>
Certificate<Field> certify_rejection(const Rejection& rejection, const BasisState<Field>& state,
                                     const PolyRing<Field>& ring);

/// Rejections whose plain S-polynomial does not top-reduce to zero modulo
/// the final basis. Empty for a sound run.
template <class Field>
std::vector<std::size_t> unsound_rejections(const BasisState<Field>& state, const PolyRing<Field>& ring);

/// Human-readable block for golden diffs.
template <class Field>
std::string render_certificate(const Certificate<Field>& cert, const PolyRing<Field>& ring);

}  // namespace f5

#endif  // F5_CERTIFICATE_HPP
