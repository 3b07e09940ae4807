#pragma once

// U_q(sl2) at fixed radii realised as an iterated skew-Tate algebra:
// U_q(h){X/R_X, alpha0, 0}{Y/R_Y, alpha1, delta}, where (X, Y) = (F, E)
// when |1/(q - q^{-1})| R_K <= R_F and (E, F) otherwise.

#include <string>

#include "qhyper/pbw.hpp"
#include "qhyper/skew_series.hpp"

namespace qhyper {

class SecondConstruction {
 public:
  using Inner = SkewAlgebra<LaurentAlgebra>;
  using Outer = SkewAlgebra<Inner>;
  using Element = Outer::Element;

  /// Throws ConfigError when neither radius hypothesis holds.
  SecondConstruction(const QParams& qp, const RadiusSpec& rs);

  const Outer& outer() const { return outer_; }
  const Inner& inner() const { return inner_; }
  /// True for the tower with F innermost (normal form K^j F^l E^n).
  bool f_inner() const { return f_inner_; }

  Element one() const { return outer_.one(); }
  Element scalar(const PadicScalar& c) const;
  Element E() const;
  Element F() const;
  Element K(long k = 1) const;
  Element mul(const Element& a, const Element& b) const { return outer_.mul(a, b); }
  PNorm norm(const Element& a) const { return outer_.norm(a); }

  /// Image of a standard PBW element, built from generator products.
  Element from_pbw(const PBWElement& x) const;
  /// Back to the E-K-F normal form through the relation engine.
  PBWElement to_pbw(const Element& x) const;

  std::string str(const Element& x) const { return outer_.str(x); }

 private:
  static bool choose_f_inner(const QParams& qp, const RadiusSpec& rs);
  static Inner make_inner(const QParams& qp, const RadiusSpec& rs, bool f_inner);
  static Outer make_outer(const QParams& qp, const RadiusSpec& rs, bool f_inner, const Inner& inner);

  QParams qp_;
  bool f_inner_;
  Inner inner_;
  Outer outer_;
};

}  // namespace qhyper
