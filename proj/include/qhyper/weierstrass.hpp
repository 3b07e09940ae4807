#pragma once

// Regularity, Weierstrass division and Weierstrass preparation in a
// skew-Tate algebra A{z, alpha, delta} of radius 1.

#include <optional>
#include <vector>

#include "qhyper/skew_series.hpp"

namespace qhyper {

template <class BaseElement>
struct RegularityReport {
  bool is_regular = false;
  long degree = -1;
  /// Canonical lift of the leading residue coefficient.
  std::optional<BaseElement> lambda;
  std::optional<BaseElement> lambda_inverse;
  /// f = f0 - D with f0 the residue lift of f and |D| < 1.
  std::optional<SkewSeries<BaseElement>> f0;
  std::optional<SkewSeries<BaseElement>> D;
};

template <class BaseElement>
struct DivisionResult {
  SkewSeries<BaseElement> quotient;
  SkewSeries<BaseElement> remainder;
  /// Gauss norm of the discarded tail g - (q f + r).
  PNorm residual = PNorm::zero();
  long iterations = 0;
};

template <class BaseElement>
struct PreparationResult {
  long degree = 0;
  /// omega = z^d - r, regular of degree d.
  SkewSeries<BaseElement> w;
  /// e' with omega = e' f.
  SkewSeries<BaseElement> e_prime;
  /// e'^{-1} to the working precision, so f = e omega.
  SkewSeries<BaseElement> e;
  PNorm residual = PNorm::zero();
};

template <NormedAlgebra Base>
RegularityReport<typename Base::Element> check_regular(const SkewAlgebra<Base>& alg,
                                                       const typename SkewAlgebra<Base>::Element& f) {
  RegularityReport<typename Base::Element> rep;
  if (alg.radius_exp() != 0 || f.radius_exp != 0) return rep;
  if (alg.norm(f) != PNorm::one()) return rep;
  auto f0 = alg.residue(f);
  if (f0.is_zero()) return rep;
  long d = f0.degree();
  const auto& lam = f0.coeffs.at(d);
  auto inv = alg.base().unit_inverse(lam);
  if (!inv) return rep;
  rep.is_regular = true;
  rep.degree = d;
  rep.lambda = lam;
  rep.lambda_inverse = *inv;
  rep.D = alg.sub(f0, f);
  rep.f0 = std::move(f0);
  return rep;
}

/// Division by a regular element following the constructive proof:
/// powers z^n are divided by f0 through a recursively built table, and the
/// error terms q_k D are fed back until they fall below the target floor.
/// |g - (q f + r)|, computed with the product rounded one p-adic digit below
/// the floor: a result <= floor certifies the true residual is <= floor,
/// and a result above it is exact.
template <NormedAlgebra Base>
PNorm residual_norm(const SkewAlgebra<Base>& alg, const typename SkewAlgebra<Base>::Element& g,
                    const typename SkewAlgebra<Base>::Element& q, const typename SkewAlgebra<Base>::Element& f,
                    const typename SkewAlgebra<Base>::Element& r, const PNorm& floor) {
  PNorm guard = floor * PNorm::power(-1);
  return alg.norm(alg.truncate(alg.sub(alg.sub(g, alg.mul_truncated(q, f, guard)), r), guard));
}

template <NormedAlgebra Base>
class WeierstrassDivider {
 public:
  using BaseElement = typename Base::Element;
  using Element = typename SkewAlgebra<Base>::Element;

  static constexpr long kMaxIterations = 100000;

  WeierstrassDivider(const SkewAlgebra<Base>& alg, const Element& f) : alg_(alg) {
    auto rep = check_regular(alg, f);
    if (!rep.is_regular) throw DomainError("Weierstrass division by a non-regular element");
    d_ = rep.degree;
    lambda_inv_ = *rep.lambda_inverse;
    f_ = f;
    f0_ = *rep.f0;
    D_ = *rep.D;
    if (alg.norm(D_) >= PNorm::one()) throw ConvergenceError("Weierstrass iteration does not contract");
  }

  long degree() const { return d_; }
  const Element& D() const { return D_; }

  /// (q, r) with g = q f + r up to the target floor and deg r < d.
  DivisionResult<BaseElement> divide(const Element& g, const PNorm& target_floor) const {
    if (target_floor.is_zero()) throw DomainError("target floor must be positive");
    DivisionResult<BaseElement> res{alg_.zero(), alg_.zero(), PNorm::zero(), 0};
    // Rows are scaled by coefficients of g, so their relative precision
    // must reach target / max(|g|, 1).
    PNorm needed = target_floor / max(alg_.norm(g), PNorm::one());
    if (table_floor_.is_zero() || needed < table_floor_) reset_table(needed);
    Element cur = alg_.truncate(g, target_floor);
    // |q_k| <= |cur_k| <= |g| |D|^{k-1}
    PNorm bound = alg_.norm(g);
    PNorm contraction = alg_.norm(D_);
    while (!cur.is_zero()) {
      if (res.iterations >= kMaxIterations) throw ConvergenceError("Weierstrass iteration cap reached");
      ++res.iterations;
      // cur = qk f0 + rk by long division, so cur - qk f - rk = qk D.
      Element qk = alg_.zero();
      reduce(cur, qk);
      res.remainder = alg_.add(res.remainder, cur);
      res.quotient = alg_.add(res.quotient, qk);
      cur = alg_.mul_truncated(qk, D_, target_floor, bound);
      bound = bound * contraction;
    }
    res.quotient = alg_.truncate(res.quotient, target_floor);
    res.remainder = alg_.truncate(res.remainder, target_floor);
    res.quotient.floor = target_floor;
    res.remainder.floor = target_floor;
    res.residual = residual_norm(alg_, g, res.quotient, f_, res.remainder, target_floor);
    return res;
  }

 private:
  void reset_table(const PNorm& floor) const {
    table_floor_ = floor;
    rows_.assign(1, alg_.truncate(f0_, floor));
    leads_.assign(1, alg_.base().truncate(lambda_inv_, floor * alg_.base().norm(lambda_inv_)));
  }

  /// rows_[m] = x^m f0, whose leading coefficient is alpha^m(lambda);
  /// leads_[m] = alpha^m(lambda^{-1}).
  void ensure_row(long m) const {
    while (static_cast<long>(rows_.size()) <= m) {
      long k = static_cast<long>(rows_.size());
      rows_.push_back(alg_.truncate(alg_.x_times(rows_.back()), table_floor_ * PNorm::power(alg_.radius_exp() * k)));
      leads_.push_back(alg_.base().truncate(alg_.alpha(leads_.back()), table_floor_ * alg_.base().norm(lambda_inv_)));
    }
  }

  /// Replaces r by its remainder modulo f0 (degree < d) and adds the
  /// quotient to q.
  void reduce(Element& r, Element& q) const {
    const auto& base = alg_.base();
    while (!r.coeffs.empty()) {
      auto top = std::prev(r.coeffs.end());
      long n = top->first;
      if (n < d_) break;
      long m = n - d_;
      ensure_row(m);
      BaseElement t = base.mul(top->second, leads_[m]);
      BaseElement minus_t = base.neg(t);
      r.coeffs.erase(top);
      for (const auto& [k, c] : rows_[m].coeffs) {
        if (k == n) continue;
        auto [it, inserted] = r.coeffs.try_emplace(k, base.zero());
        base.add_mul_to(it->second, minus_t, c);
        if (base.is_zero(it->second)) r.coeffs.erase(it);
      }
      auto [qt, fresh] = q.coeffs.try_emplace(m, base.zero());
      base.add_to(qt->second, t);
      if (base.is_zero(qt->second)) q.coeffs.erase(qt);
    }
  }

  SkewAlgebra<Base> alg_;
  long d_ = 0;
  BaseElement lambda_inv_;
  Element f_, f0_, D_;
  /// Rows are exact up to this floor relative to their norm.
  mutable PNorm table_floor_ = PNorm::zero();
  mutable std::vector<Element> rows_;
  mutable std::vector<BaseElement> leads_;
};

template <NormedAlgebra Base>
DivisionResult<typename Base::Element> wdivide(const SkewAlgebra<Base>& alg,
                                               const typename SkewAlgebra<Base>::Element& g,
                                               const typename SkewAlgebra<Base>::Element& f,
                                               const PNorm& target_floor) {
  return WeierstrassDivider<Base>(alg, f).divide(g, target_floor);
}

/// Division of g by f in batches: g is split by degree modulo `batches`,
/// each part is divided on its own and the results are summed. A second
/// batching of the same algorithm, used to witness uniqueness.
template <NormedAlgebra Base>
DivisionResult<typename Base::Element> wdivide_batched(const SkewAlgebra<Base>& alg,
                                                       const typename SkewAlgebra<Base>::Element& g,
                                                       const typename SkewAlgebra<Base>::Element& f,
                                                       const PNorm& target_floor, long batches = 2) {
  if (batches < 1) throw DomainError("batch count must be positive");
  WeierstrassDivider<Base> div(alg, f);
  DivisionResult<typename Base::Element> out{alg.zero(), alg.zero(), PNorm::zero(), 0};
  for (long b = 0; b < batches; ++b) {
    auto part = alg.zero();
    for (const auto& [n, c] : g.coeffs) {
      if (n % batches == b) part.coeffs.emplace(n, c);
    }
    if (part.is_zero()) continue;
    auto res = div.divide(part, target_floor);
    out.quotient = alg.add(out.quotient, res.quotient);
    out.remainder = alg.add(out.remainder, res.remainder);
    out.iterations += res.iterations;
  }
  out.residual = residual_norm(alg, g, out.quotient, f, out.remainder, target_floor);
  return out;
}

/// omega = z^d - r where z^d = e' f + r, so omega = e' f. The unit e with
/// f = e omega is the quotient of f by the regular polynomial omega; the
/// remainder of that division vanishes up to the floor.
template <NormedAlgebra Base>
PreparationResult<typename Base::Element> wprepare(const SkewAlgebra<Base>& alg,
                                                   const typename SkewAlgebra<Base>::Element& f,
                                                   const PNorm& target_floor) {
  using Element = typename SkewAlgebra<Base>::Element;
  WeierstrassDivider<Base> div(alg, f);
  long d = div.degree();
  Element zd = alg.monomial(alg.base().one(), d);
  auto qr = div.divide(zd, target_floor);

  PreparationResult<typename Base::Element> out;
  out.degree = d;
  out.w = alg.sub(zd, qr.remainder);
  out.e_prime = qr.quotient;
  if (!alg.unit_inverse(alg.residue(out.e_prime))) throw StructuralError("residue of e' is not a unit");

  auto er = WeierstrassDivider<Base>(alg, out.w).divide(f, target_floor);
  out.e = er.quotient;
  out.residual = residual_norm(alg, f, out.e, out.w, alg.zero(), target_floor);
  return out;
}

}  // namespace qhyper
