#ifndef F5_MODULE_VECTOR_HPP
#define F5_MODULE_VECTOR_HPP

#include <map>
#include <string>

#include "f5/polynomial.hpp"

namespace f5 {

/// Sparse element of K[x]^n: basis position (1-based) -> coefficient
/// polynomial. Zero entries are never stored.
template <class Field>
class ModuleVector {
 public:
  using Element = typename Field::Element;
  using Poly = Polynomial<Field>;

  ModuleVector() = default;

  /// The generator e_pos.
  static ModuleVector unit(std::size_t pos, const PolyRing<Field>& ring) {
    ModuleVector v;
    v.entries_.emplace(pos, ring.constant(ring.field().one()));
    return v;
  }

  bool is_zero() const noexcept { return entries_.empty(); }
  const std::map<std::size_t, Poly>& entries() const noexcept { return entries_; }
  const Poly* at(std::size_t pos) const {
    auto it = entries_.find(pos);
    return it == entries_.end() ? nullptr : &it->second;
  }

  /// this[pos] += p.
  void add_entry(const PolyRing<Field>& ring, std::size_t pos, const Poly& p) {
    if (p.is_zero()) return;
    auto it = entries_.find(pos);
    if (it == entries_.end()) {
      entries_.emplace(pos, p);
      return;
    }
    it->second = ring.add(it->second, p);
    if (it->second.is_zero()) entries_.erase(it);
  }

  /// this += c*m*other.
  void add_scaled(const PolyRing<Field>& ring, const Element& c, const Monomial& m,
                  const ModuleVector& other) {
    for (const auto& [pos, a] : other.entries_) add_entry(ring, pos, ring.mul_term(a, c, m));
  }

  ModuleVector scaled(const PolyRing<Field>& ring, const Element& c, const Monomial& m) const {
    ModuleVector out;
    out.add_scaled(ring, c, m, *this);
    return out;
  }

  /// Removes and returns the entry at pos (zero if absent).
  Poly take(std::size_t pos) {
    auto it = entries_.find(pos);
    if (it == entries_.end()) return Poly();
    Poly p = std::move(it->second);
    entries_.erase(it);
    return p;
  }

  std::string to_string(const PolyRing<Field>& ring) const {
    if (entries_.empty()) return "0";
    std::string out;
    for (const auto& [pos, a] : entries_) {
      if (!out.empty()) out += " + ";
      out += "(" + ring.to_string(a) + ")*e" + std::to_string(pos);
    }
    return out;
  }

  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

 private:
  std::map<std::size_t, Poly> entries_;
};

}  // namespace f5

#endif  // F5_MODULE_VECTOR_HPP
