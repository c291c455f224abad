#include "f5/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace f5 {

namespace {

void require_same_size(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    throw StructuralError("monomial length mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
}

}  // namespace

Monomial::Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::divides(const Monomial& other) const {
  require_same_size(*this, other);
  if (degree_ > other.degree_) return false;
  for (std::size_t v = 0; v < exps_.size(); ++v)
    if (exps_[v] > other.exps_[v]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  out *= other;
  return out;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  require_same_size(*this, other);
  for (std::size_t v = 0; v < exps_.size(); ++v) exps_[v] += other.exps_[v];
  degree_ += other.degree_;
  return *this;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw std::domain_error("monomial quotient is not exact");
  Monomial out = *this;
  for (std::size_t v = 0; v < exps_.size(); ++v) out.exps_[v] -= divisor.exps_[v];
  out.degree_ -= divisor.degree_;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  std::vector<Monomial::Exponent> e(a.size());
  for (std::size_t v = 0; v < e.size(); ++v) e[v] = std::max(a[v], b[v]);
  return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] != 0 && b[v] != 0) return false;
  return true;
}

MonomialOrder::MonomialOrder(OrderKind kind, std::size_t nvars) : kind_(kind), precedence_(nvars) {
  std::iota(precedence_.begin(), precedence_.end(), std::size_t{0});
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  std::vector<std::size_t> sorted = precedence_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t v = 0; v < sorted.size(); ++v)
    if (sorted[v] != v) throw std::invalid_argument("variable precedence is not a permutation");
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != nvars() || b.size() != nvars())
    throw StructuralError("monomial length does not match the order's variable count");
  if (kind_ == OrderKind::lex) {
    for (std::size_t v : precedence_)
      if (a[v] != b[v]) return a[v] <=> b[v];
    return std::strong_ordering::equal;
  }
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  // Smallest variable first: the side with the smaller exponent is larger.
  for (auto it = precedence_.rbegin(); it != precedence_.rend(); ++it)
    if (a[*it] != b[*it]) return b[*it] <=> a[*it];
  return std::strong_ordering::equal;
}

std::string to_string(const Monomial& m, std::span<const std::string> names) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += v < names.size() ? names[v] : "x" + std::to_string(v + 1);
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out;
}

}  // namespace f5
