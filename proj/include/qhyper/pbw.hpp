#pragma once

// U_q(sl2), its breve variant and the Borel halves in the E-K-F ordered
// PBW basis, with Hopf structure, the norms nu_R and nu'_R, and the maps
// phi and theta_alpha.

#include <array>
#include <compare>
#include <string>

#include "qhyper/format.hpp"
#include "qhyper/linear.hpp"
#include "qhyper/scalar.hpp"

namespace qhyper {

enum class Variant { standard, breve, borel_plus, borel_minus };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);

/// E^{nE} K^{nK} F^{nF}
struct PBWMonomial {
  long nE = 0;
  long nK = 0;
  long nF = 0;
  friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
  long degree() const { return nE + nF; }
  std::string str() const;
};

struct PBWElement {
  Variant variant = Variant::standard;
  Linear<PBWMonomial> terms;

  bool is_zero() const { return terms.is_zero(); }
  friend bool operator==(const PBWElement&, const PBWElement&) = default;
};

PBWElement operator+(const PBWElement& a, const PBWElement& b);
PBWElement operator-(const PBWElement& a, const PBWElement& b);
PBWElement operator*(const PadicScalar& c, const PBWElement& a);

template <std::size_t N>
using PBWTensorKey = std::array<PBWMonomial, N>;

/// Sum of N-fold tensors of PBW monomials.
template <std::size_t N>
struct PBWTensor {
  Variant variant = Variant::standard;
  Linear<PBWTensorKey<N>> terms;
  friend bool operator==(const PBWTensor&, const PBWTensor&) = default;
};

/// Radius exponents: R_E = p^eE, R_F = p^eF, R_K = p^eK.
struct RadiusSpec {
  long eE = 0;
  long eF = 0;
  long eK = 0;
};

/// Multiplication and Hopf structure of one variant.
class QAlgebra {
 public:
  QAlgebra(QParams qp, Variant v);

  const QParams& params() const { return qp_; }
  Variant variant() const { return variant_; }
  /// Exponent w in K E = q^w E K.
  long weight() const { return w_; }
  /// Exponent kappa in E F - F E = (K^kappa - K^{-kappa}) / (q - q^{-1}).
  long kappa() const { return kappa_; }

  PBWElement zero() const { return {variant_, {}}; }
  PBWElement scalar(const PadicScalar& c) const { return monomial({0, 0, 0}, c); }
  PBWElement one() const { return scalar(PadicScalar(1)); }
  PBWElement E() const { return monomial({1, 0, 0}); }
  PBWElement F() const { return monomial({0, 0, 1}); }
  PBWElement K(long k = 1) const { return monomial({0, k, 0}); }
  PBWElement monomial(const PBWMonomial& m, const PadicScalar& c = PadicScalar(1)) const;
  PBWElement from_terms(const Linear<PBWMonomial>& t) const;

  PBWElement mul(const PBWElement& x, const PBWElement& y) const;
  Linear<PBWMonomial> mul_monomials(const PBWMonomial& x, const PBWMonomial& y) const;
  PBWElement pow(const PBWElement& x, long k) const;

  PBWTensor<2> coproduct(const PBWElement& x) const;
  PadicScalar counit(const PBWElement& x) const;
  PBWElement antipode(const PBWElement& x) const;

  PBWTensor<2> tensor_mul(const PBWTensor<2>& a, const PBWTensor<2>& b) const;
  PBWTensor<3> tensor_mul(const PBWTensor<3>& a, const PBWTensor<3>& b) const;
  /// (Delta x id) t and (id x Delta) t.
  PBWTensor<3> coproduct_left(const PBWTensor<2>& t) const;
  PBWTensor<3> coproduct_right(const PBWTensor<2>& t) const;
  /// m (S x id) t and m (id x S) t.
  PBWElement antipode_left_contract(const PBWTensor<2>& t) const;
  PBWElement antipode_right_contract(const PBWTensor<2>& t) const;
  /// (eps x id) t and (id x eps) t.
  PBWElement counit_left(const PBWTensor<2>& t) const;
  PBWElement counit_right(const PBWTensor<2>& t) const;

  /// Rewrites x in the K-E-F ordered basis K^m E^n F^l (keys reuse the
  /// PBWMonomial fields).
  Linear<PBWMonomial> to_kef(const PBWElement& x) const;

  std::string str(const PBWElement& x) const;

 private:
  void check(const PBWElement& x) const;
  void check_monomial(const PBWMonomial& m) const;
  Linear<PBWMonomial> f_power_times_e_power(long c, long a) const;

  QParams qp_;
  Variant variant_;
  long w_;
  long kappa_;
};

/// nu_R(x) = max |a| R_E^{nE} R_F^{nF} R_K^{nK}.
PNorm nu_norm(const PBWElement& x, const RadiusSpec& rs, const QParams& qp);
/// nu'_R(x) = max |a| |[nE]_q!| |[nF]_q!| R_E^{nE} R_F^{nF} R_K^{nK}.
PNorm nu_prime_norm(const PBWElement& x, const RadiusSpec& rs, const QParams& qp);
PNorm monomial_weight(const PBWMonomial& m, const RadiusSpec& rs);
/// Cross norm over the monomial tensor basis.
template <std::size_t N>
PNorm tensor_nu_norm(const PBWTensor<N>& t, const RadiusSpec& rs, const QParams& qp) {
  PNorm best = PNorm::zero();
  for (const auto& [key, c] : t.terms) {
    PNorm w = qp.norm(c);
    for (const auto& m : key) w = w * monomial_weight(m, rs);
    best = max(best, w);
  }
  return best;
}

/// phi: E -> E K, F -> K^{-1} F, K -> K^2, standard into breve.
PBWElement phi(const PBWElement& x, const QParams& qp);
/// theta_alpha: E -> alpha E, F -> alpha^{-1} F, K -> K.
PBWElement theta_alpha(const PBWElement& x, const PadicScalar& alpha);

template <std::size_t N>
std::string tensor_str(const PBWTensor<N>& t) {
  return format_linear(t.terms, [](const PBWTensorKey<N>& k) {
    std::string s;
    for (std::size_t i = 0; i < N; ++i) {
      if (i) s += " (x) ";
      std::string m = k[i].str();
      s += m;
    }
    return "(" + s + ")";
  });
}

}  // namespace qhyper

