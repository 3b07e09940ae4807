#pragma once

// Normed base algebras for Ore extensions: the field L itself and the
// Laurent algebra U_q(h) = L[K, K^{-1}] with a Gauss R_K-norm.

#include <concepts>
#include <optional>
#include <string>

#include "qhyper/linear.hpp"
#include "qhyper/scalar.hpp"

namespace qhyper {

/// Capability bundle every coefficient algebra of a skew series provides.
///
/// norm() takes values in p^Z and 0, is non-archimedean and submultiplicative.
/// residue() returns the canonical lift of the image in the residue ring
/// (defined for norm <= 1). unit_inverse() inverts an element that is a unit
/// of norm 1 whose residue is a unit, and returns nullopt otherwise.
/// truncate() drops every part of norm <= floor, including the p-adic tail
/// of each surviving coefficient.
template <class A>
concept NormedAlgebra = requires(const A& alg, const typename A::Element& x, typename A::Element& acc,
                                 const PadicScalar& s, const PNorm& n) {
  typename A::Element;
  { alg.params() } -> std::same_as<const QParams&>;
  { alg.zero() } -> std::same_as<typename A::Element>;
  { alg.one() } -> std::same_as<typename A::Element>;
  { alg.add(x, x) } -> std::same_as<typename A::Element>;
  { alg.sub(x, x) } -> std::same_as<typename A::Element>;
  { alg.neg(x) } -> std::same_as<typename A::Element>;
  { alg.mul(x, x) } -> std::same_as<typename A::Element>;
  { alg.add_to(acc, x) };
  { alg.add_mul_to(acc, x, x) };
  { alg.scale(s, x) } -> std::same_as<typename A::Element>;
  { alg.norm(x) } -> std::same_as<PNorm>;
  { alg.residue(x) } -> std::same_as<typename A::Element>;
  { alg.unit_inverse(x) } -> std::same_as<std::optional<typename A::Element>>;
  { alg.truncate(x, n) } -> std::same_as<typename A::Element>;
  { alg.is_zero(x) } -> std::same_as<bool>;
  { alg.multiplicative() } -> std::same_as<bool>;
  { alg.str(x) } -> std::same_as<std::string>;
  { x == x } -> std::convertible_to<bool>;
};

/// The field L (rationals with the p-adic norm).
class ScalarField {
 public:
  using Element = PadicScalar;

  explicit ScalarField(QParams qp) : qp_(std::move(qp)) {}

  const QParams& params() const { return qp_; }
  Element zero() const { return {}; }
  Element one() const { return PadicScalar(1); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  void add_to(Element& acc, const Element& a) const { acc += a; }
  void add_mul_to(Element& acc, const Element& a, const Element& b) const { acc.add_product(a, b); }
  Element scale(const PadicScalar& s, const Element& a) const { return s * a; }
  PNorm norm(const Element& a) const { return qp_.norm(a); }
  Element residue(const Element& a) const;
  std::optional<Element> unit_inverse(const Element& a) const;
  Element truncate(const Element& a, const PNorm& floor) const;
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool multiplicative() const { return true; }
  std::string str(const Element& a) const { return a.str(); }

 private:
  QParams qp_;
};

/// Laurent polynomial in K: exponent -> coefficient.
using LaurentPoly = Linear<long>;

/// U_q(h) = L[K, K^{-1}] with norm max_n |a_n| R_K^n, R_K = p^{radius_exp}.
class LaurentAlgebra {
 public:
  using Element = LaurentPoly;

  explicit LaurentAlgebra(QParams qp, long radius_exp = 0)
      : qp_(std::move(qp)), radius_exp_(radius_exp) {}

  const QParams& params() const { return qp_; }
  long radius_exp() const { return radius_exp_; }

  Element zero() const { return {}; }
  Element one() const { return LaurentPoly(0, PadicScalar(1)); }
  /// c K^k
  Element monomial(long k, const PadicScalar& c = PadicScalar(1)) const { return LaurentPoly(k, c); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return a.scaled(PadicScalar(-1)); }
  Element mul(const Element& a, const Element& b) const;
  void add_to(Element& acc, const Element& a) const { acc += a; }
  /// acc += a b in place.
  void add_mul_to(Element& acc, const Element& a, const Element& b) const {
    for (const auto& [i, x] : a) {
      for (const auto& [j, y] : b) acc.add_product(i + j, x, y);
    }
  }
  Element scale(const PadicScalar& s, const Element& a) const { return a.scaled(s); }
  PNorm norm(const Element& a) const;
  /// Only defined for R_K = 1.
  Element residue(const Element& a) const;
  std::optional<Element> unit_inverse(const Element& a) const;
  Element truncate(const Element& a, const PNorm& floor) const;
  bool is_zero(const Element& a) const { return a.is_zero(); }
  bool multiplicative() const { return true; }
  std::string str(const Element& a) const;

  /// K -> c K, the isometry alpha_0 when c = q^2.
  Element twist(const Element& a, const PadicScalar& c) const;

 private:
  QParams qp_;
  long radius_exp_;
};

static_assert(NormedAlgebra<ScalarField>);
static_assert(NormedAlgebra<LaurentAlgebra>);

}  // namespace qhyper
