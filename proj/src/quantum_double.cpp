#include "qhyper/quantum_double.hpp"

#include <algorithm>
#include <cstdlib>

#include "qhyper/errors.hpp"
#include "qhyper/format.hpp"

namespace qhyper {

std::string DoubleMonomial::str() const {
  return join_factors({power_factor("E", nE), power_factor("K", nK), power_factor("K_-", nKm),
                       power_factor("F", nF)});
}

std::string DoubleConvention::str() const {
  std::string s;
  s += flip_first ? "flip_first=1" : "flip_first=0";
  s += flip_second ? " flip_second=1" : " flip_second=0";
  s += a2_first ? " a2_first=1" : " a2_first=0";
  s += swap_outer ? " swap_outer=1" : " swap_outer=0";
  return s;
}

BorelPairing::BorelPairing(QParams qp, DoubleConvention conv, bool use_memo)
    : qp_(std::move(qp)),
      conv_(conv),
      use_memo_(use_memo),
      A_(qp_, Variant::borel_plus),
      B_(qp_, Variant::borel_minus) {}

BorelPairing::BorelPairing(const BorelPairing& o)
    : qp_(o.qp_), conv_(o.conv_), use_memo_(o.use_memo_), A_(o.A_), B_(o.B_) {}

PadicScalar BorelPairing::pair(const PBWMonomial& a, const PBWMonomial& b) const {
  if (a.nF != 0) throw StructuralError("left argument of the Borel pairing must lie in U_q(b+)");
  if (b.nE != 0) throw StructuralError("right argument of the Borel pairing must lie in U_q(b-)");
  if (!use_memo_) return compute(a, b);
  auto key = std::make_pair(a, b);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  PadicScalar v = compute(a, b);
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(key, v);
  return v;
}

PadicScalar BorelPairing::compute(const PBWMonomial& a, const PBWMonomial& b) const {
  const PBWMonomial one{};
  if (a == one) return b.nF == 0 ? PadicScalar(1) : PadicScalar(0);
  if (b == one) return a.nE == 0 ? PadicScalar(1) : PadicScalar(0);
  if (a.nE != b.nF) return {};
  if (a.nE == 0) return qp_.q_pow(-2 * a.nK * b.nK);

  if (a.nE + std::labs(a.nK) > 1) {
    // a = E * rest
    PBWMonomial e{1, 0, 0};
    PBWMonomial rest{a.nE - 1, a.nK, 0};
    PadicScalar s;
    auto db = B_.coproduct(B_.monomial(b));
    for (const auto& [k, c] : db.terms) {
      if (conv_.flip_first) {
        s += c * pair(e, k[1]) * pair(rest, k[0]);
      } else {
        s += c * pair(e, k[0]) * pair(rest, k[1]);
      }
    }
    return s;
  }
  if (std::labs(b.nK) + b.nF > 1) {
    // b = h * rest with h = K_-^{+-1} or F
    PBWMonomial h, rest;
    if (b.nK != 0) {
      long sg = b.nK > 0 ? 1 : -1;
      h = {0, sg, 0};
      rest = {0, b.nK - sg, b.nF};
    } else {
      h = {0, 0, 1};
      rest = {0, 0, b.nF - 1};
    }
    PadicScalar s;
    auto da = A_.coproduct(A_.monomial(a));
    for (const auto& [k, c] : da.terms) {
      if (conv_.flip_second) {
        s += c * pair(k[0], rest) * pair(k[1], h);
      } else {
        s += c * pair(k[0], h) * pair(k[1], rest);
      }
    }
    return s;
  }
  // a = E, b = F
  return PadicScalar(1) / (qp_.q_inv() - qp_.q());
}

PadicScalar BorelPairing::pair(const PBWElement& x, const PBWElement& y) const {
  if (x.variant != Variant::borel_plus && x.variant != Variant::standard) {
    throw StructuralError("left argument of the Borel pairing must lie in U_q(b+)");
  }
  if (y.variant != Variant::borel_minus && y.variant != Variant::standard) {
    throw StructuralError("right argument of the Borel pairing must lie in U_q(b-)");
  }
  PadicScalar s;
  for (const auto& [a, ca] : x.terms) {
    for (const auto& [b, cb] : y.terms) s += ca * cb * pair(a, b);
  }
  return s;
}

PadicScalar BorelPairing::pair_bar(const PBWMonomial& a, const PBWMonomial& b) const {
  PBWElement sa = A_.antipode(A_.monomial(a));
  PadicScalar s;
  for (const auto& [m, c] : sa.terms) s += c * pair(m, b);
  return s;
}

PadicScalar BorelPairing::pair_bar(const PBWElement& x, const PBWElement& y) const {
  PadicScalar s;
  for (const auto& [a, ca] : x.terms) {
    for (const auto& [b, cb] : y.terms) s += ca * cb * pair_bar(a, b);
  }
  return s;
}

QuantumDouble::QuantumDouble(QParams qp, DoubleConvention conv)
    : qp_(std::move(qp)),
      conv_(conv),
      pairing_(qp_, conv),
      A_(qp_, Variant::borel_plus),
      B_(qp_, Variant::borel_minus) {}

DoubleElement QuantumDouble::monomial(const DoubleMonomial& m, const PadicScalar& c) const {
  if (m.nE < 0 || m.nF < 0) throw DomainError("negative power of E or F");
  return DoubleElement(m, c);
}

Linear<DoubleMonomial> QuantumDouble::f_power_times_e_power(long c, long a) const {
  PadicScalar q2 = qp_.q_pow(2), q2inv = qp_.q_pow(-2);
  std::vector<PadicScalar> up(c + 1), down(c + 1);
  PadicScalar pu(1), pd(1);
  for (long s = 0; s < c; ++s) {
    up[s + 1] = up[s] + pu;
    down[s + 1] = down[s] + pd;
    pu *= q2;
    pd *= q2inv;
  }
  const PadicScalar& inv = qp_.inv_q_minus_qinv();
  Linear<DoubleMonomial> cur({0, 0, 0, c}, PadicScalar(1));
  for (long i = 0; i < a; ++i) {
    Linear<DoubleMonomial> next;
    for (const auto& [m, v] : cur) {
      // F^m E = E F^m - 1/(q - q^{-1}) sum_s (q^{2s} K - q^{-2s} K_-^{-1}) F^{m-1}
      next.add({m.nE + 1, m.nK, m.nKm, m.nF}, v * qp_.q_pow(2 * (m.nK + m.nKm)));
      if (m.nF > 0) {
        next.add({m.nE, m.nK + 1, m.nKm, m.nF - 1}, -(v * inv * up[m.nF]));
        next.add({m.nE, m.nK, m.nKm - 1, m.nF - 1}, v * inv * down[m.nF]);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

DoubleElement QuantumDouble::mul_relations(const DoubleMonomial& x, const DoubleMonomial& y) const {
  DoubleElement out;
  long kx = x.nK + x.nKm;
  long ky = y.nK + y.nKm;
  if (x.nF == 0 || y.nE == 0) {
    out.add({x.nE + y.nE, x.nK + y.nK, x.nKm + y.nKm, x.nF + y.nF}, qp_.q_pow(2 * (kx * y.nE + x.nF * ky)));
    return out;
  }
  for (const auto& [m, v] : f_power_times_e_power(x.nF, y.nE)) {
    out.add({x.nE + m.nE, x.nK + m.nK + y.nK, x.nKm + m.nKm + y.nKm, m.nF + y.nF},
            v * qp_.q_pow(2 * (kx * m.nE + m.nF * ky)));
  }
  return out;
}

DoubleElement QuantumDouble::mul_relations(const DoubleElement& x, const DoubleElement& y) const {
  DoubleElement out;
  for (const auto& [mx, cx] : x) {
    for (const auto& [my, cy] : y) out.add(mul_relations(mx, my), cx * cy);
  }
  return out;
}

DoubleElement QuantumDouble::pow(const DoubleElement& x, long k) const {
  if (k < 0) throw DomainError("negative power of a double element");
  DoubleElement r = one();
  for (long i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

BATensor QuantumDouble::formula_product(const BATensor& x, const BATensor& y) const {
  BATensor out;
  for (const auto& [kx, cx] : x) {
    const auto& [b, a] = kx;
    auto d2a = A_.coproduct_left(A_.coproduct(A_.monomial(a)));
    for (const auto& [ky, cy] : y) {
      const auto& [b2, a2] = ky;
      auto d2b = B_.coproduct_left(B_.coproduct(B_.monomial(b2)));
      for (const auto& [ta, ca] : d2a.terms) {
        for (const auto& [tb, cb] : d2b.terms) {
          PadicScalar w = conv_.swap_outer
                              ? pairing_.pair_bar(ta[2], tb[2]) * pairing_.pair(ta[0], tb[0])
                              : pairing_.pair_bar(ta[0], tb[0]) * pairing_.pair(ta[2], tb[2]);
          if (w.is_zero()) continue;
          w *= cx * cy * ca * cb;
          auto bl = B_.mul_monomials(b, tb[1]);
          auto al = conv_.a2_first ? A_.mul_monomials(ta[1], a2) : A_.mul_monomials(a2, ta[1]);
          for (const auto& [mb, vb] : bl) {
            for (const auto& [ma, va] : al) out.add({mb, ma}, w * vb * va);
          }
        }
      }
    }
  }
  return out;
}

BATensor QuantumDouble::to_ba(const DoubleElement& x) const {
  BATensor out;
  const PBWMonomial one{};
  for (const auto& [m, c] : x) {
    BATensor left({one, PBWMonomial{m.nE, m.nK, 0}}, PadicScalar(1));
    BATensor right({PBWMonomial{0, m.nKm, m.nF}, one}, PadicScalar(1));
    out.add(formula_product(left, right), c);
  }
  return out;
}

DoubleElement QuantumDouble::from_ba(const BATensor& t) const {
  DoubleElement out;
  BATensor rem = t;
  long guard = 0;
  while (!rem.is_zero()) {
    if (++guard > 1000000) throw StructuralError("B (x) A inversion did not terminate");
    auto top = rem.begin();
    for (auto it = rem.begin(); it != rem.end(); ++it) {
      long d = it->first.first.nF + it->first.second.nE;
      long dt = top->first.first.nF + top->first.second.nE;
      if (d > dt) top = it;
    }
    const auto [b, a] = top->first;
    PadicScalar v = top->second;
    DoubleMonomial m{a.nE, a.nK, b.nK, b.nF};
    BATensor psi = to_ba(DoubleElement(m, PadicScalar(1)));
    PadicScalar c = psi.coeff({b, a});
    if (c.is_zero()) throw StructuralError("B (x) A image has a vanishing leading term");
    PadicScalar k = v / c;
    out.add(m, k);
    rem.add(psi, -k);
  }
  return out;
}

DoubleElement QuantumDouble::mul_formula(const DoubleElement& x, const DoubleElement& y) const {
  return from_ba(formula_product(to_ba(x), to_ba(y)));
}

DoubleTensor QuantumDouble::tensor_mul(const DoubleTensor& a, const DoubleTensor& b) const {
  DoubleTensor out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      auto l = mul_relations(ka[0], kb[0]);
      auto r = mul_relations(ka[1], kb[1]);
      for (const auto& [ml, cl] : l) {
        for (const auto& [mr, cr] : r) out.add({ml, mr}, ca * cb * cl * cr);
      }
    }
  }
  return out;
}

DoubleTensor QuantumDouble::coproduct(const DoubleElement& x) const {
  const DoubleMonomial one{};
  DoubleTensor dE, dF;
  dE.add({DoubleMonomial{1, 0, 0, 0}, DoubleMonomial{0, 1, 0, 0}}, PadicScalar(1));
  dE.add({one, DoubleMonomial{1, 0, 0, 0}}, PadicScalar(1));
  dF.add({DoubleMonomial{0, 0, 0, 1}, one}, PadicScalar(1));
  dF.add({DoubleMonomial{0, 0, -1, 0}, DoubleMonomial{0, 0, 0, 1}}, PadicScalar(1));
  DoubleTensor out;
  for (const auto& [m, c] : x) {
    DoubleTensor t({one, one}, PadicScalar(1));
    for (long i = 0; i < m.nE; ++i) t = tensor_mul(t, dE);
    DoubleMonomial k{0, m.nK, m.nKm, 0};
    t = tensor_mul(t, DoubleTensor({k, k}, c));
    for (long i = 0; i < m.nF; ++i) t = tensor_mul(t, dF);
    out += t;
  }
  return out;
}

PadicScalar QuantumDouble::counit(const DoubleElement& x) const {
  PadicScalar s;
  for (const auto& [m, c] : x) {
    if (m.nE == 0 && m.nF == 0) s += c;
  }
  return s;
}

DoubleElement QuantumDouble::antipode(const DoubleElement& x) const {
  DoubleElement sE = monomial({1, -1, 0, 0}, PadicScalar(-1));
  DoubleElement sF = monomial({0, 0, 1, 1}, PadicScalar(-1));
  DoubleElement out;
  for (const auto& [m, c] : x) {
    DoubleElement t = scalar(c);
    for (long i = 0; i < m.nF; ++i) t = mul(t, sF);
    t = mul(t, monomial({0, -m.nK, -m.nKm, 0}));
    for (long i = 0; i < m.nE; ++i) t = mul(t, sE);
    out += t;
  }
  return out;
}

PBWElement QuantumDouble::quotient(const DoubleElement& x) const {
  PBWElement out{Variant::standard, {}};
  for (const auto& [m, c] : x) out.terms.add({m.nE, m.nK + m.nKm, m.nF}, c);
  return out;
}

std::string QuantumDouble::str(const DoubleElement& x) const {
  return format_linear(x, [](const DoubleMonomial& m) { return m.str(); });
}

std::string double_tensor_str(const DoubleTensor& t) {
  return format_linear(t, [](const std::array<DoubleMonomial, 2>& k) {
    return "(" + k[0].str() + " (x) " + k[1].str() + ")";
  });
}

PNorm double_nu_norm(const DoubleElement& x, const RadiusSpec& rs, const QParams& qp) {
  PNorm best = PNorm::zero();
  for (const auto& [m, c] : x) best = max(best, qp.norm(c) * PNorm::power(rs.eE * m.nE + rs.eF * m.nF));
  return best;
}

PNorm double_tensor_nu_norm(const DoubleTensor& t, const RadiusSpec& rs, const QParams& qp) {
  PNorm best = PNorm::zero();
  for (const auto& [k, c] : t) {
    long e = 0;
    for (const auto& m : k) e += rs.eE * m.nE + rs.eF * m.nF;
    best = max(best, qp.norm(c) * PNorm::power(e));
  }
  return best;
}

GradedDefect graded_commutativity_defect(const QuantumDouble& D, const DoubleElement& x,
                                         const DoubleElement& y, const RadiusSpec& rs) {
  GradedDefect g;
  DoubleElement comm = D.mul(x, y) - D.mul(y, x);
  g.commutator_norm = double_nu_norm(comm, rs, D.params());
  g.product_norm = double_nu_norm(x, rs, D.params()) * double_nu_norm(y, rs, D.params());
  g.strict = g.commutator_norm < g.product_norm;
  return g;
}

namespace {

bool relations_hold(const QuantumDouble& D, const QParams& qp) {
  const PBWMonomial one{};
  auto a_gen = [&](long nE, long nK) { return BATensor({one, PBWMonomial{nE, nK, 0}}, PadicScalar(1)); };
  auto b_gen = [&](long nK, long nF) { return BATensor({PBWMonomial{0, nK, nF}, one}, PadicScalar(1)); };
  auto mul3 = [&](const BATensor& x, const BATensor& y, const BATensor& z) {
    return D.formula_product(D.formula_product(x, y), z);
  };
  BATensor E = a_gen(1, 0), K = a_gen(0, 1), Ki = a_gen(0, -1);
  BATensor F = b_gen(0, 1), Km = b_gen(1, 0), Kmi = b_gen(-1, 0);

  BATensor comm = D.formula_product(E, F) - D.formula_product(F, E);
  BATensor expect = K.scaled(qp.inv_q_minus_qinv()) - Kmi.scaled(qp.inv_q_minus_qinv());
  if (!(comm == expect)) return false;
  if (!(mul3(Km, E, Kmi) == E.scaled(qp.q_pow(2)))) return false;
  if (!(mul3(K, F, Ki) == F.scaled(qp.q_pow(-2)))) return false;
  if (!(D.formula_product(K, Km) == D.formula_product(Km, K))) return false;
  if (!(mul3(K, E, Ki) == E.scaled(qp.q_pow(2)))) return false;
  if (!(mul3(Km, F, Kmi) == F.scaled(qp.q_pow(-2)))) return false;
  return true;
}

bool pairing_respects_relations(const BorelPairing& P) {
  const QAlgebra& A = P.A();
  const QAlgebra& B = P.B();
  const DoubleConvention& cv = P.convention();
  std::vector<PBWMonomial> agens{{1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
  std::vector<PBWMonomial> bgens{{0, 0, 1}, {0, 1, 0}, {0, -1, 0}};
  std::vector<PBWMonomial> bs, as;
  for (long j = -1; j <= 1; ++j) {
    for (long l = 0; l <= 2; ++l) bs.push_back({0, j, l});
    for (long n = 0; n <= 2; ++n) as.push_back({n, j, 0});
  }
  for (const auto& x : agens) {
    for (const auto& y : agens) {
      PBWElement xy = A.mul(A.monomial(x), A.monomial(y));
      for (const auto& b : bs) {
        PadicScalar lhs = P.pair(xy, B.monomial(b));
        PadicScalar rhs;
        for (const auto& [k, c] : B.coproduct(B.monomial(b)).terms) {
          rhs += cv.flip_first ? c * P.pair(x, k[1]) * P.pair(y, k[0]) : c * P.pair(x, k[0]) * P.pair(y, k[1]);
        }
        if (!(lhs == rhs)) return false;
      }
    }
  }
  for (const auto& x : bgens) {
    for (const auto& y : bgens) {
      PBWElement xy = B.mul(B.monomial(x), B.monomial(y));
      for (const auto& a : as) {
        PadicScalar lhs = P.pair(A.monomial(a), xy);
        PadicScalar rhs;
        for (const auto& [k, c] : A.coproduct(A.monomial(a)).terms) {
          rhs += cv.flip_second ? c * P.pair(k[0], y) * P.pair(k[1], x) : c * P.pair(k[0], x) * P.pair(k[1], y);
        }
        if (!(lhs == rhs)) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<ConventionTrial> convention_trials(const QParams& qp) {
  std::vector<ConventionTrial> out;
  for (int bits = 0; bits < 16; ++bits) {
    DoubleConvention cv{(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0, (bits & 8) != 0};
    QuantumDouble D(qp, cv);
    ConventionTrial t;
    t.convention = cv;
    t.relations_ok = relations_hold(D, qp);
    t.pairing_well_defined = pairing_respects_relations(D.pairing());
    out.push_back(t);
  }
  return out;
}

DoubleConvention select_convention(const QParams& qp) {
  std::vector<DoubleConvention> ok;
  for (const auto& t : convention_trials(qp)) {
    if (t.relations_ok && t.pairing_well_defined) ok.push_back(t.convention);
  }
  if (ok.size() != 1) throw StructuralError("double product convention is not uniquely determined");
  return ok.front();
}

}  // namespace qhyper
