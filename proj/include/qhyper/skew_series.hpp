#pragma once

// Ore extensions A[x, alpha, delta] over a normed base algebra, completed
// with respect to the Gauss R-norm. Elements are finite representatives
// together with a precision floor.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qhyper/base_algebras.hpp"
#include "qhyper/errors.hpp"

namespace qhyper {

inline bool fully_parenthesized(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && i + 1 < s.size()) return false;
  }
  return true;
}

/// Finite series sum_n f_n x^n with radius R = p^{radius_exp}.
/// Represents its coset modulo terms of Gauss norm <= floor.
template <class BaseElement>
struct SkewSeries {
  std::map<long, BaseElement> coeffs;
  long radius_exp = 0;
  PNorm floor = PNorm::zero();

  long degree() const { return coeffs.empty() ? -1 : coeffs.rbegin()->first; }
  bool is_zero() const { return coeffs.empty(); }

  /// Equality of representatives; the floors are not compared.
  friend bool operator==(const SkewSeries& a, const SkewSeries& b) {
    return a.radius_exp == b.radius_exp && a.coeffs == b.coeffs;
  }
};

/// alpha must be an L-linear endomorphism of the base and delta an
/// alpha-derivation: delta(ab) = delta(a) b + alpha(a) delta(b).
/// An empty delta is the zero derivation.
template <class BaseElement>
struct OreData {
  std::function<BaseElement(const BaseElement&)> alpha;
  std::function<BaseElement(const BaseElement&)> delta;
  PNorm alpha_bound = PNorm::one();
  PNorm delta_bound = PNorm::one();
  bool alpha_isometric = true;
};

template <NormedAlgebra Base>
class SkewAlgebra {
 public:
  using BaseElement = typename Base::Element;
  using Element = SkewSeries<BaseElement>;
  using Ore = OreData<BaseElement>;

  SkewAlgebra(Base base, Ore ore, long radius_exp = 0, std::string var = "z")
      : base_(std::move(base)), ore_(std::move(ore)), radius_exp_(radius_exp), var_(std::move(var)) {
    if (!ore_.alpha) throw ConfigError("Ore data needs an endomorphism alpha");
  }

  const Base& base() const { return base_; }
  const Ore& ore() const { return ore_; }
  const QParams& params() const { return base_.params(); }
  long radius_exp() const { return radius_exp_; }
  const std::string& variable_name() const { return var_; }
  bool has_derivation() const { return static_cast<bool>(ore_.delta); }

  BaseElement alpha(const BaseElement& a) const { return ore_.alpha(a); }
  BaseElement delta(const BaseElement& a) const {
    return ore_.delta ? ore_.delta(a) : base_.zero();
  }

  Element zero() const { return Element{{}, radius_exp_, PNorm::zero()}; }
  Element one() const { return constant(base_.one()); }
  Element constant(const BaseElement& b) const { return monomial(b, 0); }
  Element variable() const { return monomial(base_.one(), 1); }
  /// b x^n
  Element monomial(const BaseElement& b, long n) const {
    Element r = zero();
    if (n < 0) throw DomainError("negative power of an Ore variable");
    if (!base_.is_zero(b)) r.coeffs.emplace(n, b);
    return r;
  }

  Element add(const Element& f, const Element& g) const {
    check_same(f, g);
    Element r = f;
    for (const auto& [n, c] : g.coeffs) accumulate(r, n, c);
    r.floor = max(f.floor, g.floor);
    return r;
  }
  Element sub(const Element& f, const Element& g) const { return add(f, neg(g)); }
  void add_to(Element& acc, const Element& f) const {
    check_same(acc, f);
    for (const auto& [n, c] : f.coeffs) accumulate(acc, n, c);
    acc.floor = max(acc.floor, f.floor);
  }
  void add_mul_to(Element& acc, const Element& f, const Element& g) const { add_to(acc, mul(f, g)); }
  Element neg(const Element& f) const {
    Element r = f;
    for (auto& [n, c] : r.coeffs) c = base_.neg(c);
    return r;
  }
  Element scale(const PadicScalar& s, const Element& f) const {
    Element r = zero();
    if (s.is_zero()) return r;
    for (const auto& [n, c] : f.coeffs) r.coeffs.emplace(n, base_.scale(s, c));
    r.floor = f.floor * params().norm(s);
    return r;
  }
  /// b * f, multiplying every coefficient on the left.
  Element left_mul(const BaseElement& b, const Element& f) const {
    Element r = zero();
    for (const auto& [n, c] : f.coeffs) accumulate(r, n, base_.mul(b, c));
    r.floor = f.floor * base_.norm(b);
    return r;
  }

  /// x * f via x a = alpha(a) x + delta(a).
  Element x_times(const Element& f) const {
    Element r = zero();
    for (const auto& [n, c] : f.coeffs) {
      accumulate(r, n + 1, alpha(c));
      if (ore_.delta) accumulate(r, n, ore_.delta(c));
    }
    r.floor = f.floor * PNorm::power(radius_exp_);
    return r;
  }

  Element mul(const Element& f, const Element& g) const {
    check_same(f, g);
    Element out = zero();
    long top = f.degree();
    for (const auto& [k, gk] : g.coeffs) {
      // P holds x^n * gk for the current n.
      Element p = constant(gk);
      for (long n = 0; n <= top; ++n) {
        auto it = f.coeffs.find(n);
        if (it != f.coeffs.end()) {
          for (const auto& [d, c] : p.coeffs) accumulate_product(out, d + k, it->second, c);
        }
        if (n < top) p = x_times(p);
      }
    }
    out.floor = max(f.floor * norm(g), norm(f) * g.floor);
    return out;
  }

  /// f * g modulo parts of Gauss norm <= floor. With an isometric alpha
  /// and no derivation the twisted coefficients alpha^n(g_k) are rounded as
  /// they are formed, which keeps their size bounded.
  /// f_norm_bound, when given, must be >= |f|.
  Element mul_truncated(const Element& f, const Element& g, const PNorm& floor,
                        std::optional<PNorm> f_norm_bound = std::nullopt) const {
    if (floor.is_zero() || !ore_.alpha_isometric || ore_.delta) return truncate(mul(f, g), floor);
    check_same(f, g);
    Element out = zero();
    if (f.is_zero() || g.is_zero()) return out;
    PNorm nf = f_norm_bound ? *f_norm_bound : norm(f);
    long top = f.degree();
    for (const auto& [k, gk] : g.coeffs) {
      // |f_n| |err| R^{n+k} <= floor for every n.
      PNorm eps = floor / (nf * PNorm::power(radius_exp_ * k));
      BaseElement c = base_.truncate(gk, eps);
      for (long n = 0; n <= top; ++n) {
        auto it = f.coeffs.find(n);
        if (it != f.coeffs.end()) accumulate_product(out, n + k, it->second, c);
        if (n < top) c = base_.truncate(alpha(c), eps);
      }
    }
    return truncate(out, floor);
  }

  Element pow(const Element& f, long k) const {
    if (k < 0) throw DomainError("negative power of a skew series");
    Element r = one();
    for (long i = 0; i < k; ++i) r = mul(r, f);
    return r;
  }

  /// Gauss norm max_n |f_n| R^n.
  PNorm norm(const Element& f) const {
    PNorm best = PNorm::zero();
    for (const auto& [n, c] : f.coeffs) best = max(best, base_.norm(c) * PNorm::power(radius_exp_ * n));
    return best;
  }
  PNorm gauss_norm(const Element& f) const { return norm(f); }

  /// Canonical lift of the image in the reduced Ore extension.
  Element residue(const Element& f) const {
    if (radius_exp_ != 0) throw StructuralError("residue reduction needs radius 1; rescale first");
    if (norm(f) > PNorm::one()) throw DomainError("residue of a series of Gauss norm > 1");
    Element r = zero();
    for (const auto& [n, c] : f.coeffs) accumulate(r, n, base_.residue(c));
    return r;
  }
  Element residue_reduce(const Element& f) const { return residue(f); }

  std::optional<Element> unit_inverse(const Element& f) const {
    if (f.coeffs.size() != 1 || f.coeffs.begin()->first != 0) return std::nullopt;
    auto inv = base_.unit_inverse(f.coeffs.begin()->second);
    if (!inv) return std::nullopt;
    return constant(*inv);
  }

  /// Drops every part of Gauss norm <= floor and records the floor.
  Element truncate(const Element& f, const PNorm& floor) const {
    if (floor.is_zero()) return f;
    Element r = zero();
    for (const auto& [n, c] : f.coeffs) {
      BaseElement kept = base_.truncate(c, floor / PNorm::power(radius_exp_ * n));
      if (!base_.is_zero(kept)) r.coeffs.emplace(n, std::move(kept));
    }
    r.floor = max(f.floor, floor);
    return r;
  }

  bool is_zero(const Element& f) const { return f.is_zero(); }

  /// Whether the Gauss norm is multiplicative: multiplicative base and
  /// isometric alpha, with delta = 0 when R < 1.
  bool multiplicative() const {
    return base_.multiplicative() && ore_.alpha_isometric && (radius_exp_ >= 0 || !ore_.delta);
  }

  /// The algebra in z with x = s z: radius R / |s|, derivation s^{-1} delta.
  SkewAlgebra substituted(const PadicScalar& s) const {
    if (s.is_zero()) throw DomainError("substitution by zero");
    Ore o = ore_;
    if (o.delta) {
      PadicScalar inv = PadicScalar(1) / s;
      auto d = ore_.delta;
      Base b = base_;
      o.delta = [d, b, inv](const BaseElement& a) { return b.scale(inv, d(a)); };
      o.delta_bound = ore_.delta_bound * params().norm(inv);
    }
    long v = params().val(s).value();
    return SkewAlgebra(base_, std::move(o), radius_exp_ + v, var_);
  }

  /// Image of f under x -> s z, living in substituted(s).
  Element substitute(const Element& f, const PadicScalar& s) const {
    check_own(f);
    long v = params().val(s).value();
    Element r{{}, radius_exp_ + v, f.floor};
    for (const auto& [n, c] : f.coeffs) r.coeffs.emplace(n, base_.scale(s.pow(n), c));
    return r;
  }

  /// The isometric substitution x -> s z with |s| = R, landing in radius 1.
  Element rescale(const Element& f, const PadicScalar& s) const {
    if (s.is_zero() || params().norm(s) != PNorm::power(radius_exp_)) {
      throw DomainError("rescale needs |s| = R");
    }
    return substitute(f, s);
  }

  std::string str(const Element& f) const {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
      const auto& [n, c] = *it;
      std::string cs = base_.str(c);
      bool neg = false;
      if (cs.find(' ') == std::string::npos && cs.size() > 1 && cs[0] == '-') {
        neg = true;
        cs = cs.substr(1);
      }
      if (!first) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      first = false;
      if (cs.find(' ') != std::string::npos && !fully_parenthesized(cs)) cs = "(" + cs + ")";
      if (n == 0) {
        out += cs;
        continue;
      }
      if (cs != "1") out += cs + "*";
      out += var_;
      if (n != 1) out += "^" + std::to_string(n);
    }
    return out;
  }

  /// Spot check of the Ore axioms on a list of samples: the twisted Leibniz
  /// rule and the declared operator-norm bounds.
  bool check_ore_data(const std::vector<BaseElement>& samples) const {
    for (const auto& a : samples) {
      if (base_.norm(alpha(a)) > ore_.alpha_bound * base_.norm(a)) return false;
      if (ore_.alpha_isometric && base_.norm(alpha(a)) != base_.norm(a)) return false;
      if (base_.norm(delta(a)) > ore_.delta_bound * base_.norm(a)) return false;
      for (const auto& b : samples) {
        BaseElement lhs = delta(base_.mul(a, b));
        BaseElement rhs = base_.add(base_.mul(delta(a), b), base_.mul(alpha(a), delta(b)));
        if (!(lhs == rhs)) return false;
        if (!(alpha(base_.mul(a, b)) == base_.mul(alpha(a), alpha(b)))) return false;
      }
    }
    return true;
  }

 private:
  void accumulate(Element& r, long n, const BaseElement& c) const {
    if (base_.is_zero(c)) return;
    auto [it, inserted] = r.coeffs.try_emplace(n, c);
    if (!inserted) {
      base_.add_to(it->second, c);
      if (base_.is_zero(it->second)) r.coeffs.erase(it);
    }
  }
  /// r_n += a b
  void accumulate_product(Element& r, long n, const BaseElement& a, const BaseElement& b) const {
    auto [it, inserted] = r.coeffs.try_emplace(n, base_.zero());
    base_.add_mul_to(it->second, a, b);
    if (base_.is_zero(it->second)) r.coeffs.erase(it);
  }
  void check_own(const Element& f) const {
    if (f.radius_exp != radius_exp_) throw StructuralError("skew series radius does not match the algebra");
  }
  void check_same(const Element& f, const Element& g) const {
    check_own(f);
    check_own(g);
  }

  Base base_;
  Ore ore_;
  long radius_exp_;
  std::string var_;
};

/// Ore data of L[z] with alpha = id, delta = 0.
inline OreData<PadicScalar> trivial_scalar_ore() {
  OreData<PadicScalar> o;
  o.alpha = [](const PadicScalar& a) { return a; };
  return o;
}

/// Ore data of U_q(h)[F] style twisting: K -> c K, delta = 0.
inline OreData<LaurentPoly> laurent_twist_ore(const LaurentAlgebra& base, const PadicScalar& c) {
  OreData<LaurentPoly> o;
  // Powers of c are cached; the cache is shared by copies of the data.
  struct Powers {
    std::mutex m;
    std::map<long, PadicScalar> cache;
  };
  auto powers = std::make_shared<Powers>();
  o.alpha = [c, powers](const LaurentPoly& a) {
    LaurentPoly r;
    std::lock_guard<std::mutex> lock(powers->m);
    for (const auto& [k, v] : a) {
      auto it = powers->cache.find(k);
      if (it == powers->cache.end()) it = powers->cache.emplace(k, c.pow(k)).first;
      r.add(k, v * it->second);
    }
    return r;
  };
  o.alpha_isometric = base.params().norm(c) == PNorm::one();
  o.alpha_bound = max(PNorm::one(), base.params().norm(c));
  return o;
}

}  // namespace qhyper
