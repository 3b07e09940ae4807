#pragma once

// The coordinate algebra SL_q(2) (and the pre-quotient M_q(2)), its Hopf
// structure and automorphisms, the pairings with the breve and standard
// quantum enveloping algebras, and dual norms.

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "qhyper/linear.hpp"
#include "qhyper/pbw.hpp"

namespace qhyper {

/// a^s c^r b^t (A-led) or d^s c^r b^t with s >= 1 (D-led).
struct CoordMonomial {
  bool d_led = false;
  long s = 0;
  long r = 0;
  long t = 0;
  friend auto operator<=>(const CoordMonomial&, const CoordMonomial&) = default;
  long degree() const { return s + r + t; }
  std::string str() const;
};

using CoordElement = Linear<CoordMonomial>;
using CoordTensor = Linear<std::array<CoordMonomial, 2>>;
using CoordTensor3 = Linear<std::array<CoordMonomial, 3>>;

class SLq2 {
 public:
  explicit SLq2(QParams qp) : qp_(std::move(qp)) {}
  const QParams& params() const { return qp_; }

  CoordElement one() const { return CoordElement(CoordMonomial{}, PadicScalar(1)); }
  CoordElement scalar(const PadicScalar& c) const { return CoordElement(CoordMonomial{}, c); }
  /// Generator 'a', 'b', 'c' or 'd'.
  CoordElement gen(char g) const;
  CoordElement monomial(const CoordMonomial& m, const PadicScalar& c = PadicScalar(1)) const;
  /// Normal form of a word over a, b, c, d.
  CoordElement normalize(const std::string& word) const;

  CoordElement mul(const CoordElement& x, const CoordElement& y) const;
  CoordElement mul_monomials(const CoordMonomial& x, const CoordMonomial& y) const;
  CoordElement mul_gen(const CoordElement& x, char g) const;
  CoordElement pow(const CoordElement& x, long k) const;
  /// a d - q b c.
  CoordElement det_q() const;

  CoordTensor coproduct(const CoordElement& x) const;
  PadicScalar counit(const CoordElement& x) const;
  CoordElement antipode(const CoordElement& x) const;
  CoordTensor tensor_mul(const CoordTensor& a, const CoordTensor& b) const;
  CoordTensor3 coproduct_left(const CoordTensor& t) const;
  CoordTensor3 coproduct_right(const CoordTensor& t) const;
  CoordElement antipode_left_contract(const CoordTensor& t) const;
  CoordElement antipode_right_contract(const CoordTensor& t) const;
  CoordElement counit_left(const CoordTensor& t) const;
  CoordElement counit_right(const CoordTensor& t) const;

  /// a -> alpha a, b -> beta c, c -> beta^{-1} b, d -> alpha^{-1} d.
  CoordElement transpose_auto(const CoordElement& x, const PadicScalar& alpha, const PadicScalar& beta) const;
  /// a -> alpha a, b -> beta b, c -> beta^{-1} c, d -> alpha^{-1} d.
  CoordElement diagonal_auto(const CoordElement& x, const PadicScalar& alpha, const PadicScalar& beta) const;

  std::string str(const CoordElement& x) const;

 private:
  CoordElement image_of_monomial(const CoordMonomial& m, const CoordElement& ia, const CoordElement& ib,
                                 const CoordElement& ic, const CoordElement& id) const;
  QParams qp_;
};

/// M_q(2) without the determinant relation; basis a^s c^r b^t d^u.
struct MqMonomial {
  long s = 0;
  long r = 0;
  long t = 0;
  long u = 0;
  friend auto operator<=>(const MqMonomial&, const MqMonomial&) = default;
  std::string str() const;
};

using MqElement = Linear<MqMonomial>;

class Mq2 {
 public:
  explicit Mq2(QParams qp) : qp_(std::move(qp)) {}
  MqElement gen(char g) const;
  MqElement normalize(const std::string& word) const;
  MqElement mul(const MqElement& x, const MqElement& y) const;
  MqElement mul_gen(const MqElement& x, char g) const;
  MqElement det_q() const;
  /// Image in SL_q(2) under det_q = 1.
  CoordElement to_slq2(const MqElement& x) const;
  std::string str(const MqElement& x) const;

 private:
  MqElement d_power_times(long u, char g) const;
  QParams qp_;
};

/// <K^m E^n F^l, y> in the breve pairing; x is given in the K-E-F basis.
PadicScalar breve_pairing_kef(long m, long n, long l, const CoordMonomial& y, const QParams& qp);
PadicScalar breve_pairing(const PBWElement& x, const CoordElement& y, const QParams& qp);

/// <K^m E^n F^l, y> for U_q(sl2) from the closed formula.
PadicScalar uq_pairing_kef(long m, long n, long l, const CoordMonomial& y, const QParams& qp);
PadicScalar uq_pairing(const PBWElement& x, const CoordElement& y, const QParams& qp);
/// The same value through <phi(x), theta(y)>-breve with the diagonal
/// scaling b -> u^{-1} b, c -> u c.
PadicScalar uq_pairing_via_breve(const PBWElement& x, const CoordElement& y, const QParams& qp);

/// max over terms of |coeff| R_E^{-r} R_F^{-t}.
PNorm dual_norm(const CoordElement& y, const RadiusSpec& rs, const QParams& qp);

/// sup |<x, y>| / nu'(x) over K^m E^n F^l with |m|, n, l <= bound.
PNorm dual_norm_sweep(const CoordElement& y, const RadiusSpec& rs, const QParams& qp, long bound);

/// Rank modulo a large prime of the Gram matrix between coordinate
/// monomials of degree <= deg and K^m E^n F^l with |m|, n, l <= deg.
struct GramReport {
  long rows = 0;
  long cols = 0;
  long rank = 0;
  std::uint64_t modulus = 0;
};
GramReport pairing_gram_rank(long deg, const QParams& qp);

std::string coord_tensor_str(const CoordTensor& t);

}  // namespace qhyper
