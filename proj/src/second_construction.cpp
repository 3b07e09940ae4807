#include "qhyper/second_construction.hpp"

#include "qhyper/errors.hpp"

namespace qhyper {

bool SecondConstruction::choose_f_inner(const QParams& qp, const RadiusSpec& rs) {
  PNorm lhs = qp.norm(qp.inv_q_minus_qinv()) * PNorm::power(rs.eK);
  if (lhs <= PNorm::power(rs.eF)) return true;
  if (lhs <= PNorm::power(rs.eE)) return false;
  throw ConfigError("second construction needs |1/(q - q^-1)| R_K <= R_F or <= R_E");
}

SecondConstruction::Inner SecondConstruction::make_inner(const QParams& qp, const RadiusSpec& rs,
                                                         bool f_inner) {
  LaurentAlgebra lau(qp, rs.eK);
  // F K = q^2 K F and E K = q^{-2} K E.
  PadicScalar c0 = f_inner ? qp.q_pow(2) : qp.q_pow(-2);
  return Inner(lau, laurent_twist_ore(lau, c0), f_inner ? rs.eF : rs.eE, f_inner ? "F" : "E");
}

SecondConstruction::Outer SecondConstruction::make_outer(const QParams& qp, const RadiusSpec& rs,
                                                         bool f_inner, const Inner& inner) {
  const LaurentAlgebra& lau = inner.base();
  PadicScalar c1 = f_inner ? qp.q_pow(-2) : qp.q_pow(2);
  // Y X^l = X^l Y + delta(X^l) with
  // delta(X^l) = sign/(q - q^{-1}) sum_{i<l} (q^{2 eps i} K - q^{-2 eps i} K^{-1}) X^{l-1}.
  long eps = f_inner ? 1 : -1;
  PadicScalar sign = f_inner ? PadicScalar(1) : PadicScalar(-1);
  PadicScalar inv = qp.inv_q_minus_qinv();

  auto alpha = [inner, lau, c1](const Inner::Element& a) {
    Inner::Element r = inner.zero();
    for (const auto& [l, poly] : a.coeffs) r = inner.add(r, inner.monomial(lau.twist(poly, c1), l));
    return r;
  };
  auto delta = [inner, lau, c1, eps, sign, inv, qp](const Inner::Element& a) {
    Inner::Element r = inner.zero();
    for (const auto& [l, poly] : a.coeffs) {
      if (l == 0) continue;
      PadicScalar up, down;
      for (long i = 0; i < l; ++i) {
        up += qp.q_pow(2 * eps * i);
        down += qp.q_pow(-2 * eps * i);
      }
      LaurentPoly k = lau.monomial(1, sign * inv * up) - lau.monomial(-1, sign * inv * down);
      r = inner.add(r, inner.monomial(lau.mul(lau.twist(poly, c1), k), l - 1));
    }
    return r;
  };
  Outer::Ore ore;
  ore.alpha = alpha;
  ore.delta = delta;
  ore.alpha_isometric = true;
  ore.delta_bound = qp.norm(inv) * PNorm::power(rs.eK) / PNorm::power(f_inner ? rs.eF : rs.eE);
  return Outer(inner, ore, f_inner ? rs.eE : rs.eF, f_inner ? "E" : "F");
}

SecondConstruction::SecondConstruction(const QParams& qp, const RadiusSpec& rs)
    : qp_(qp),
      f_inner_(choose_f_inner(qp, rs)),
      inner_(make_inner(qp, rs, f_inner_)),
      outer_(make_outer(qp, rs, f_inner_, inner_)) {}

SecondConstruction::Element SecondConstruction::scalar(const PadicScalar& c) const {
  return outer_.constant(inner_.constant(inner_.base().monomial(0, c)));
}

SecondConstruction::Element SecondConstruction::K(long k) const {
  return outer_.constant(inner_.constant(inner_.base().monomial(k)));
}

SecondConstruction::Element SecondConstruction::E() const {
  if (f_inner_) return outer_.variable();
  return outer_.constant(inner_.variable());
}

SecondConstruction::Element SecondConstruction::F() const {
  if (f_inner_) return outer_.constant(inner_.variable());
  return outer_.variable();
}

SecondConstruction::Element SecondConstruction::from_pbw(const PBWElement& x) const {
  if (x.variant != Variant::standard) throw StructuralError("second construction takes standard elements");
  Element out = outer_.zero();
  for (const auto& [m, c] : x.terms) {
    Element t = scalar(c);
    for (long i = 0; i < m.nE; ++i) t = mul(t, E());
    t = mul(t, K(m.nK));
    for (long i = 0; i < m.nF; ++i) t = mul(t, F());
    out = outer_.add(out, t);
  }
  return out;
}

PBWElement SecondConstruction::to_pbw(const Element& x) const {
  QAlgebra uq(qp_, Variant::standard);
  PBWElement out = uq.zero();
  for (const auto& [n, inner_el] : x.coeffs) {
    for (const auto& [l, poly] : inner_el.coeffs) {
      for (const auto& [j, c] : poly) {
        // K^j X^l Y^n
        PBWElement x_pow = f_inner_ ? uq.pow(uq.F(), l) : uq.pow(uq.E(), l);
        PBWElement y_pow = f_inner_ ? uq.pow(uq.E(), n) : uq.pow(uq.F(), n);
        out = out + c * uq.mul(uq.mul(uq.K(j), x_pow), y_pow);
      }
    }
  }
  return out;
}

}  // namespace qhyper
