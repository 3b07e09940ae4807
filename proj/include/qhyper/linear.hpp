#pragma once

#include <map>
#include <utility>

#include "qhyper/scalar.hpp"

namespace qhyper {

/// Finite linear combination of basis keys with exact coefficients.
/// No zero coefficient is ever stored.
template <class Key>
class Linear {
 public:
  using Map = std::map<Key, PadicScalar>;

  Linear() = default;
  Linear(const Key& k, PadicScalar c) { add(k, std::move(c)); }

  void add(const Key& k, const PadicScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// coefficient of k += a b
  void add_product(const Key& k, const PadicScalar& a, const PadicScalar& b) {
    auto it = terms_.lower_bound(k);
    if (it == terms_.end() || terms_.key_comp()(k, it->first)) {
      PadicScalar c = a * b;
      if (!c.is_zero()) terms_.emplace_hint(it, k, std::move(c));
      return;
    }
    it->second.add_product(a, b);
    if (it->second.is_zero()) terms_.erase(it);
  }

  void add(const Linear& o, const PadicScalar& c = PadicScalar(1)) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : o.terms_) add(k, v * c);
  }

  Linear& operator+=(const Linear& o) {
    add(o);
    return *this;
  }
  Linear& operator-=(const Linear& o) {
    add(o, PadicScalar(-1));
    return *this;
  }
  friend Linear operator+(Linear a, const Linear& b) { return a += b; }
  friend Linear operator-(Linear a, const Linear& b) { return a -= b; }

  Linear scaled(const PadicScalar& c) const {
    Linear r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
  }

  PadicScalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? PadicScalar() : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const Linear&, const Linear&) = default;

 private:
  Map terms_;
};

/// Bilinear product of two combinations through a basis-level product.
template <class Key, class MulFn>
Linear<Key> bilinear(const Linear<Key>& x, const Linear<Key>& y, MulFn&& mul) {
  Linear<Key> out;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) out.add(mul(kx, ky), cx * cy);
  }
  return out;
}

}  // namespace qhyper
