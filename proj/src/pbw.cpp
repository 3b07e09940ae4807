#include "qhyper/pbw.hpp"

#include <vector>

#include "qhyper/errors.hpp"
#include "qhyper/qcombinatorics.hpp"

namespace qhyper {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::standard: return "standard";
    case Variant::breve: return "breve";
    case Variant::borel_plus: return "borel+";
    case Variant::borel_minus: return "borel-";
  }
  return "standard";
}

Variant parse_variant(const std::string& s) {
  if (s == "standard") return Variant::standard;
  if (s == "breve") return Variant::breve;
  if (s == "borel+") return Variant::borel_plus;
  if (s == "borel-") return Variant::borel_minus;
  throw ConfigError("unknown variant '" + s + "'");
}

std::string PBWMonomial::str() const {
  return join_factors({power_factor("E", nE), power_factor("K", nK), power_factor("F", nF)});
}

namespace {

void same_variant(const PBWElement& a, const PBWElement& b) {
  if (a.variant != b.variant) throw StructuralError("mixing elements of different algebra variants");
}

}  // namespace

PBWElement operator+(const PBWElement& a, const PBWElement& b) {
  same_variant(a, b);
  return {a.variant, a.terms + b.terms};
}

PBWElement operator-(const PBWElement& a, const PBWElement& b) {
  same_variant(a, b);
  return {a.variant, a.terms - b.terms};
}

PBWElement operator*(const PadicScalar& c, const PBWElement& a) { return {a.variant, a.terms.scaled(c)}; }

QAlgebra::QAlgebra(QParams qp, Variant v) : qp_(std::move(qp)), variant_(v) {
  if (v == Variant::breve) {
    w_ = 1;
    kappa_ = 2;
  } else {
    w_ = 2;
    kappa_ = 1;
  }
}

void QAlgebra::check_monomial(const PBWMonomial& m) const {
  if (m.nE < 0 || m.nF < 0) throw DomainError("negative power of E or F");
  if (variant_ == Variant::borel_plus && m.nF > 0) throw StructuralError("F is not in the positive Borel half");
  if (variant_ == Variant::borel_minus && m.nE > 0) throw StructuralError("E is not in the negative Borel half");
}

void QAlgebra::check(const PBWElement& x) const {
  if (x.variant != variant_) throw StructuralError("element of variant " + variant_name(x.variant) +
                                                   " used in " + variant_name(variant_));
  for (const auto& [m, c] : x.terms) check_monomial(m);
}

PBWElement QAlgebra::monomial(const PBWMonomial& m, const PadicScalar& c) const {
  check_monomial(m);
  return {variant_, Linear<PBWMonomial>(m, c)};
}

PBWElement QAlgebra::from_terms(const Linear<PBWMonomial>& t) const {
  PBWElement x{variant_, t};
  check(x);
  return x;
}

Linear<PBWMonomial> QAlgebra::f_power_times_e_power(long c, long a) const {
  // Prefix sums of q^{w kappa s} and q^{-w kappa s}.
  PadicScalar step = qp_.q_pow(w_ * kappa_);
  PadicScalar step_inv = PadicScalar(1) / step;
  std::vector<PadicScalar> up(c + 1), down(c + 1);
  PadicScalar pu(1), pd(1);
  for (long s = 0; s < c; ++s) {
    up[s + 1] = up[s] + pu;
    down[s + 1] = down[s] + pd;
    pu *= step;
    pd *= step_inv;
  }
  const PadicScalar& inv = qp_.inv_q_minus_qinv();

  Linear<PBWMonomial> cur({0, 0, c}, PadicScalar(1));
  for (long step_e = 0; step_e < a; ++step_e) {
    Linear<PBWMonomial> next;
    for (const auto& [m, v] : cur) {
      next.add({m.nE + 1, m.nK, m.nF}, v * qp_.q_pow(w_ * m.nK));
      if (m.nF > 0) {
        next.add({m.nE, m.nK + kappa_, m.nF - 1}, -(v * inv * up[m.nF]));
        next.add({m.nE, m.nK - kappa_, m.nF - 1}, v * inv * down[m.nF]);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Linear<PBWMonomial> QAlgebra::mul_monomials(const PBWMonomial& x, const PBWMonomial& y) const {
  Linear<PBWMonomial> out;
  if (x.nF == 0 || y.nE == 0) {
    PadicScalar c = qp_.q_pow(w_ * (x.nK * y.nE + x.nF * y.nK));
    out.add({x.nE + y.nE, x.nK + y.nK, x.nF + y.nF}, c);
    return out;
  }
  Linear<PBWMonomial> mid = f_power_times_e_power(x.nF, y.nE);
  for (const auto& [m, v] : mid) {
    PadicScalar c = v * qp_.q_pow(w_ * (x.nK * m.nE + m.nF * y.nK));
    out.add({x.nE + m.nE, x.nK + m.nK + y.nK, m.nF + y.nF}, c);
  }
  return out;
}

PBWElement QAlgebra::mul(const PBWElement& x, const PBWElement& y) const {
  check(x);
  check(y);
  PBWElement out = zero();
  for (const auto& [mx, cx] : x.terms) {
    for (const auto& [my, cy] : y.terms) out.terms.add(mul_monomials(mx, my), cx * cy);
  }
  return out;
}

PBWElement QAlgebra::pow(const PBWElement& x, long k) const {
  if (k < 0) throw DomainError("negative power of a PBW element");
  PBWElement r = one();
  for (long i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

PBWTensor<2> QAlgebra::tensor_mul(const PBWTensor<2>& a, const PBWTensor<2>& b) const {
  PBWTensor<2> out{variant_, {}};
  for (const auto& [ka, ca] : a.terms) {
    for (const auto& [kb, cb] : b.terms) {
      auto left = mul_monomials(ka[0], kb[0]);
      auto right = mul_monomials(ka[1], kb[1]);
      for (const auto& [l, cl] : left) {
        for (const auto& [r, cr] : right) out.terms.add({l, r}, ca * cb * cl * cr);
      }
    }
  }
  return out;
}

PBWTensor<3> QAlgebra::tensor_mul(const PBWTensor<3>& a, const PBWTensor<3>& b) const {
  PBWTensor<3> out{variant_, {}};
  for (const auto& [ka, ca] : a.terms) {
    for (const auto& [kb, cb] : b.terms) {
      auto x = mul_monomials(ka[0], kb[0]);
      auto y = mul_monomials(ka[1], kb[1]);
      auto z = mul_monomials(ka[2], kb[2]);
      for (const auto& [m0, c0] : x) {
        for (const auto& [m1, c1] : y) {
          for (const auto& [m2, c2] : z) out.terms.add({m0, m1, m2}, ca * cb * c0 * c1 * c2);
        }
      }
    }
  }
  return out;
}

PBWTensor<2> QAlgebra::coproduct(const PBWElement& x) const {
  check(x);
  const PBWMonomial one_m{0, 0, 0};
  PBWTensor<2> dE{variant_, {}}, dF{variant_, {}};
  if (variant_ == Variant::breve) {
    dE.terms.add({PBWMonomial{1, 0, 0}, PBWMonomial{0, 1, 0}}, PadicScalar(1));
    dE.terms.add({PBWMonomial{0, -1, 0}, PBWMonomial{1, 0, 0}}, PadicScalar(1));
    dF.terms.add({PBWMonomial{0, 0, 1}, PBWMonomial{0, 1, 0}}, PadicScalar(1));
    dF.terms.add({PBWMonomial{0, -1, 0}, PBWMonomial{0, 0, 1}}, PadicScalar(1));
  } else {
    dE.terms.add({PBWMonomial{1, 0, 0}, PBWMonomial{0, 1, 0}}, PadicScalar(1));
    dE.terms.add({one_m, PBWMonomial{1, 0, 0}}, PadicScalar(1));
    dF.terms.add({PBWMonomial{0, 0, 1}, one_m}, PadicScalar(1));
    dF.terms.add({PBWMonomial{0, -1, 0}, PBWMonomial{0, 0, 1}}, PadicScalar(1));
  }
  PBWTensor<2> out{variant_, {}};
  for (const auto& [m, c] : x.terms) {
    PBWTensor<2> t{variant_, {}};
    t.terms.add({PBWMonomial{0, m.nK, 0}, PBWMonomial{0, m.nK, 0}}, c);
    PBWTensor<2> left{variant_, {}};
    left.terms.add({one_m, one_m}, PadicScalar(1));
    for (long i = 0; i < m.nE; ++i) left = tensor_mul(left, dE);
    t = tensor_mul(left, t);
    for (long i = 0; i < m.nF; ++i) t = tensor_mul(t, dF);
    out.terms.add(t.terms);
  }
  return out;
}

PadicScalar QAlgebra::counit(const PBWElement& x) const {
  check(x);
  PadicScalar s;
  for (const auto& [m, c] : x.terms) {
    if (m.nE == 0 && m.nF == 0) s += c;
  }
  return s;
}

PBWElement QAlgebra::antipode(const PBWElement& x) const {
  check(x);
  PBWElement sE = zero(), sF = zero();
  if (variant_ == Variant::breve) {
    sE = monomial({1, 0, 0}, -qp_.q());
    sF = monomial({0, 0, 1}, -qp_.q_inv());
  } else {
    if (variant_ != Variant::borel_minus) sE = monomial({1, -1, 0}, PadicScalar(-1));
    // S(F) = -K F
    if (variant_ != Variant::borel_plus) sF = monomial({0, 1, 1}, PadicScalar(-1));
  }
  PBWElement out = zero();
  for (const auto& [m, c] : x.terms) {
    PBWElement t = scalar(c);
    for (long i = 0; i < m.nF; ++i) t = mul(t, sF);
    t = mul(t, K(-m.nK));
    for (long i = 0; i < m.nE; ++i) t = mul(t, sE);
    out = out + t;
  }
  return out;
}

PBWTensor<3> QAlgebra::coproduct_left(const PBWTensor<2>& t) const {
  PBWTensor<3> out{variant_, {}};
  for (const auto& [k, c] : t.terms) {
    auto d = coproduct(monomial(k[0]));
    for (const auto& [dk, dc] : d.terms) out.terms.add({dk[0], dk[1], k[1]}, c * dc);
  }
  return out;
}

PBWTensor<3> QAlgebra::coproduct_right(const PBWTensor<2>& t) const {
  PBWTensor<3> out{variant_, {}};
  for (const auto& [k, c] : t.terms) {
    auto d = coproduct(monomial(k[1]));
    for (const auto& [dk, dc] : d.terms) out.terms.add({k[0], dk[0], dk[1]}, c * dc);
  }
  return out;
}

PBWElement QAlgebra::antipode_left_contract(const PBWTensor<2>& t) const {
  PBWElement out = zero();
  for (const auto& [k, c] : t.terms) out = out + c * mul(antipode(monomial(k[0])), monomial(k[1]));
  return out;
}

PBWElement QAlgebra::antipode_right_contract(const PBWTensor<2>& t) const {
  PBWElement out = zero();
  for (const auto& [k, c] : t.terms) out = out + c * mul(monomial(k[0]), antipode(monomial(k[1])));
  return out;
}

PBWElement QAlgebra::counit_left(const PBWTensor<2>& t) const {
  PBWElement out = zero();
  for (const auto& [k, c] : t.terms) {
    if (k[0].nE == 0 && k[0].nF == 0) out.terms.add(k[1], c);
  }
  return out;
}

PBWElement QAlgebra::counit_right(const PBWTensor<2>& t) const {
  PBWElement out = zero();
  for (const auto& [k, c] : t.terms) {
    if (k[1].nE == 0 && k[1].nF == 0) out.terms.add(k[0], c);
  }
  return out;
}

Linear<PBWMonomial> QAlgebra::to_kef(const PBWElement& x) const {
  check(x);
  Linear<PBWMonomial> out;
  for (const auto& [m, c] : x.terms) out.add(m, c * qp_.q_pow(-w_ * m.nE * m.nK));
  return out;
}

std::string QAlgebra::str(const PBWElement& x) const {
  return format_linear(x.terms, [](const PBWMonomial& m) { return m.str(); });
}

PNorm monomial_weight(const PBWMonomial& m, const RadiusSpec& rs) {
  return PNorm::power(rs.eE * m.nE + rs.eF * m.nF + rs.eK * m.nK);
}

PNorm nu_norm(const PBWElement& x, const RadiusSpec& rs, const QParams& qp) {
  PNorm best = PNorm::zero();
  for (const auto& [m, c] : x.terms) best = max(best, qp.norm(c) * monomial_weight(m, rs));
  return best;
}

PNorm nu_prime_norm(const PBWElement& x, const RadiusSpec& rs, const QParams& qp) {
  PNorm best = PNorm::zero();
  for (const auto& [m, c] : x.terms) {
    PNorm w = qp.norm(c) * monomial_weight(m, rs) * qp.norm(q_factorial(m.nE, qp)) *
              qp.norm(q_factorial(m.nF, qp));
    best = max(best, w);
  }
  return best;
}

PBWElement phi(const PBWElement& x, const QParams& qp) {
  if (x.variant == Variant::breve) throw StructuralError("phi expects a standard element");
  QAlgebra br(qp, Variant::breve);
  PBWElement eimg = br.monomial({1, 1, 0});
  PBWElement fimg = br.monomial({0, -1, 1});
  PBWElement out = br.zero();
  for (const auto& [m, c] : x.terms) {
    PBWElement t = br.scalar(c);
    for (long i = 0; i < m.nE; ++i) t = br.mul(t, eimg);
    t = br.mul(t, br.K(2 * m.nK));
    for (long i = 0; i < m.nF; ++i) t = br.mul(t, fimg);
    out = out + t;
  }
  return out;
}

PBWElement theta_alpha(const PBWElement& x, const PadicScalar& alpha) {
  if (alpha.is_zero()) throw DomainError("theta_alpha needs alpha != 0");
  PBWElement out{x.variant, {}};
  for (const auto& [m, c] : x.terms) out.terms.add(m, c * alpha.pow(m.nE - m.nF));
  return out;
}

}  // namespace qhyper
