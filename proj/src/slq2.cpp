#include "qhyper/slq2.hpp"

#include <cstdlib>
#include <optional>
#include <vector>

#include "qhyper/errors.hpp"
#include "qhyper/format.hpp"
#include "qhyper/qcombinatorics.hpp"

namespace qhyper {

std::string CoordMonomial::str() const {
  return join_factors({power_factor(d_led ? "d" : "a", s), power_factor("c", r), power_factor("b", t)});
}

std::string MqMonomial::str() const {
  return join_factors({power_factor("a", s), power_factor("c", r), power_factor("b", t), power_factor("d", u)});
}

CoordElement SLq2::gen(char g) const {
  switch (g) {
    case 'a': return monomial({false, 1, 0, 0});
    case 'b': return monomial({false, 0, 0, 1});
    case 'c': return monomial({false, 0, 1, 0});
    case 'd': return monomial({true, 1, 0, 0});
    default: throw DomainError(std::string("unknown generator '") + g + "'");
  }
}

CoordElement SLq2::monomial(const CoordMonomial& m, const PadicScalar& c) const {
  if (m.s < 0 || m.r < 0 || m.t < 0) throw DomainError("negative exponent in a coordinate monomial");
  if (m.d_led && m.s == 0) return CoordElement(CoordMonomial{false, 0, m.r, m.t}, c);
  return CoordElement(m, c);
}

CoordElement SLq2::normalize(const std::string& word) const {
  CoordElement x = one();
  for (char g : word) x = mul_gen(x, g);
  return x;
}

CoordElement SLq2::mul_gen(const CoordElement& x, char g) const {
  CoordElement out;
  for (const auto& [m, v] : x) {
    long s = m.s, r = m.r, t = m.t;
    switch (g) {
      case 'b': out.add({m.d_led, s, r, t + 1}, v); break;
      case 'c': out.add({m.d_led, s, r + 1, t}, v); break;
      case 'a':
        if (!m.d_led) {
          out.add({false, s + 1, r, t}, v * qp_.q_pow(-(r + t)));
        } else {
          // d a = 1 + q^{-1} b c
          PadicScalar k = v * qp_.q_pow(-(r + t));
          bool led = s - 1 > 0;
          out.add({led, s - 1, r, t}, k);
          out.add({led, s - 1, r + 1, t + 1}, k * qp_.q_inv());
        }
        break;
      case 'd':
        if (m.d_led || s == 0) {
          out.add({true, s + 1, r, t}, v * qp_.q_pow(r + t));
        } else {
          // a d = 1 + q b c
          PadicScalar k = v * qp_.q_pow(r + t);
          out.add({false, s - 1, r, t}, k);
          out.add({false, s - 1, r + 1, t + 1}, k * qp_.q());
        }
        break;
      default: throw DomainError(std::string("unknown generator '") + g + "'");
    }
  }
  return out;
}

CoordElement SLq2::mul_monomials(const CoordMonomial& x, const CoordMonomial& y) const {
  CoordElement out(x, PadicScalar(1));
  char lead = y.d_led ? 'd' : 'a';
  for (long i = 0; i < y.s; ++i) out = mul_gen(out, lead);
  for (long i = 0; i < y.r; ++i) out = mul_gen(out, 'c');
  for (long i = 0; i < y.t; ++i) out = mul_gen(out, 'b');
  return out;
}

CoordElement SLq2::mul(const CoordElement& x, const CoordElement& y) const {
  CoordElement out;
  for (const auto& [mx, cx] : x) {
    for (const auto& [my, cy] : y) out.add(mul_monomials(mx, my), cx * cy);
  }
  return out;
}

CoordElement SLq2::pow(const CoordElement& x, long k) const {
  if (k < 0) throw DomainError("negative power in SL_q(2)");
  CoordElement r = one();
  for (long i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

CoordElement SLq2::det_q() const { return normalize("ad") - normalize("bc").scaled(qp_.q()); }

CoordTensor SLq2::tensor_mul(const CoordTensor& a, const CoordTensor& b) const {
  CoordTensor out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      auto l = mul_monomials(ka[0], kb[0]);
      auto r = mul_monomials(ka[1], kb[1]);
      for (const auto& [ml, cl] : l) {
        for (const auto& [mr, cr] : r) out.add({ml, mr}, ca * cb * cl * cr);
      }
    }
  }
  return out;
}

namespace {

const CoordMonomial kA{false, 1, 0, 0};
const CoordMonomial kB{false, 0, 0, 1};
const CoordMonomial kC{false, 0, 1, 0};
const CoordMonomial kD{true, 1, 0, 0};

CoordTensor gen_coproduct(char g) {
  CoordTensor t;
  PadicScalar one(1);
  switch (g) {
    case 'a': t.add({kA, kA}, one); t.add({kB, kC}, one); break;
    case 'b': t.add({kA, kB}, one); t.add({kB, kD}, one); break;
    case 'c': t.add({kC, kA}, one); t.add({kD, kC}, one); break;
    case 'd': t.add({kC, kB}, one); t.add({kD, kD}, one); break;
    default: break;
  }
  return t;
}

}  // namespace

CoordTensor SLq2::coproduct(const CoordElement& x) const {
  CoordTensor out;
  const CoordMonomial one_m{};
  for (const auto& [m, c] : x) {
    CoordTensor t({one_m, one_m}, c);
    CoordTensor lead = gen_coproduct(m.d_led ? 'd' : 'a');
    for (long i = 0; i < m.s; ++i) t = tensor_mul(t, lead);
    CoordTensor dc = gen_coproduct('c');
    for (long i = 0; i < m.r; ++i) t = tensor_mul(t, dc);
    CoordTensor db = gen_coproduct('b');
    for (long i = 0; i < m.t; ++i) t = tensor_mul(t, db);
    out += t;
  }
  return out;
}

PadicScalar SLq2::counit(const CoordElement& x) const {
  PadicScalar s;
  for (const auto& [m, c] : x) {
    if (m.r == 0 && m.t == 0) s += c;
  }
  return s;
}

CoordElement SLq2::antipode(const CoordElement& x) const {
  CoordElement sb = gen('b').scaled(-qp_.q_inv());
  CoordElement sc = gen('c').scaled(-qp_.q());
  CoordElement out;
  for (const auto& [m, c] : x) {
    CoordElement t = scalar(c);
    for (long i = 0; i < m.t; ++i) t = mul(t, sb);
    for (long i = 0; i < m.r; ++i) t = mul(t, sc);
    CoordElement lead = gen(m.d_led ? 'a' : 'd');
    for (long i = 0; i < m.s; ++i) t = mul(t, lead);
    out += t;
  }
  return out;
}

CoordTensor3 SLq2::coproduct_left(const CoordTensor& t) const {
  CoordTensor3 out;
  for (const auto& [k, c] : t) {
    for (const auto& [dk, dc] : coproduct(CoordElement(k[0], PadicScalar(1)))) out.add({dk[0], dk[1], k[1]}, c * dc);
  }
  return out;
}

CoordTensor3 SLq2::coproduct_right(const CoordTensor& t) const {
  CoordTensor3 out;
  for (const auto& [k, c] : t) {
    for (const auto& [dk, dc] : coproduct(CoordElement(k[1], PadicScalar(1)))) out.add({k[0], dk[0], dk[1]}, c * dc);
  }
  return out;
}

CoordElement SLq2::antipode_left_contract(const CoordTensor& t) const {
  CoordElement out;
  for (const auto& [k, c] : t) out.add(mul(antipode(CoordElement(k[0], PadicScalar(1))), CoordElement(k[1], c)));
  return out;
}

CoordElement SLq2::antipode_right_contract(const CoordTensor& t) const {
  CoordElement out;
  for (const auto& [k, c] : t) out.add(mul(CoordElement(k[0], c), antipode(CoordElement(k[1], PadicScalar(1)))));
  return out;
}

CoordElement SLq2::counit_left(const CoordTensor& t) const {
  CoordElement out;
  for (const auto& [k, c] : t) {
    if (k[0].r == 0 && k[0].t == 0) out.add(k[1], c);
  }
  return out;
}

CoordElement SLq2::counit_right(const CoordTensor& t) const {
  CoordElement out;
  for (const auto& [k, c] : t) {
    if (k[1].r == 0 && k[1].t == 0) out.add(k[0], c);
  }
  return out;
}

CoordElement SLq2::transpose_auto(const CoordElement& x, const PadicScalar& alpha, const PadicScalar& beta) const {
  if (alpha.is_zero() || beta.is_zero()) throw DomainError("automorphism parameters must be nonzero");
  CoordElement out;
  for (const auto& [m, c] : x) {
    PadicScalar k = c * alpha.pow(m.d_led ? -m.s : m.s) * beta.pow(m.t - m.r);
    out.add({m.d_led, m.s, m.t, m.r}, k);
  }
  return out;
}

CoordElement SLq2::diagonal_auto(const CoordElement& x, const PadicScalar& alpha, const PadicScalar& beta) const {
  if (alpha.is_zero() || beta.is_zero()) throw DomainError("automorphism parameters must be nonzero");
  CoordElement out;
  for (const auto& [m, c] : x) out.add(m, c * alpha.pow(m.d_led ? -m.s : m.s) * beta.pow(m.t - m.r));
  return out;
}

std::string SLq2::str(const CoordElement& x) const {
  return format_linear(x, [](const CoordMonomial& m) { return m.str(); });
}

std::string coord_tensor_str(const CoordTensor& t) {
  return format_linear(t, [](const std::array<CoordMonomial, 2>& k) {
    return "(" + k[0].str() + " (x) " + k[1].str() + ")";
  });
}

MqElement Mq2::gen(char g) const {
  switch (g) {
    case 'a': return MqElement(MqMonomial{1, 0, 0, 0}, PadicScalar(1));
    case 'b': return MqElement(MqMonomial{0, 0, 1, 0}, PadicScalar(1));
    case 'c': return MqElement(MqMonomial{0, 1, 0, 0}, PadicScalar(1));
    case 'd': return MqElement(MqMonomial{0, 0, 0, 1}, PadicScalar(1));
    default: throw DomainError(std::string("unknown generator '") + g + "'");
  }
}

MqElement Mq2::d_power_times(long u, char g) const {
  switch (g) {
    case 'd': return MqElement(MqMonomial{0, 0, 0, u + 1}, PadicScalar(1));
    case 'b': return MqElement(MqMonomial{0, 0, 1, u}, qp_.q_pow(-u));
    case 'c': return MqElement(MqMonomial{0, 1, 0, u}, qp_.q_pow(-u));
    case 'a': {
      // d^u a = (d^{u-1} a) d - (q - q^{-1}) q^{-2(u-1)} c b d^{u-1}
      MqElement cur(MqMonomial{1, 0, 0, 0}, PadicScalar(1));
      PadicScalar qmq = qp_.q() - qp_.q_inv();
      for (long k = 1; k <= u; ++k) {
        MqElement next;
        for (const auto& [m, v] : cur) next.add({m.s, m.r, m.t, m.u + 1}, v);
        next.add({0, 1, 1, k - 1}, -(qmq * qp_.q_pow(-2 * (k - 1))));
        cur = std::move(next);
      }
      return cur;
    }
    default: throw DomainError(std::string("unknown generator '") + g + "'");
  }
}

MqElement Mq2::mul_gen(const MqElement& x, char g) const {
  MqElement out;
  for (const auto& [m, v] : x) {
    for (const auto& [y, w] : d_power_times(m.u, g)) {
      out.add({m.s + y.s, m.r + y.r, m.t + y.t, y.u}, v * w * qp_.q_pow(-(m.r + m.t) * y.s));
    }
  }
  return out;
}

MqElement Mq2::normalize(const std::string& word) const {
  MqElement x(MqMonomial{}, PadicScalar(1));
  for (char g : word) x = mul_gen(x, g);
  return x;
}

MqElement Mq2::mul(const MqElement& x, const MqElement& y) const {
  MqElement out;
  for (const auto& [my, cy] : y) {
    MqElement part = x.scaled(cy);
    for (long i = 0; i < my.s; ++i) part = mul_gen(part, 'a');
    for (long i = 0; i < my.r; ++i) part = mul_gen(part, 'c');
    for (long i = 0; i < my.t; ++i) part = mul_gen(part, 'b');
    for (long i = 0; i < my.u; ++i) part = mul_gen(part, 'd');
    out += part;
  }
  return out;
}

MqElement Mq2::det_q() const { return normalize("ad") - normalize("bc").scaled(qp_.q()); }

CoordElement Mq2::to_slq2(const MqElement& x) const {
  SLq2 sl(qp_);
  CoordElement out;
  for (const auto& [m, c] : x) {
    CoordElement t = sl.monomial({false, m.s, m.r, m.t}, c);
    for (long i = 0; i < m.u; ++i) t = sl.mul_gen(t, 'd');
    out += t;
  }
  return out;
}

std::string Mq2::str(const MqElement& x) const {
  return format_linear(x, [](const MqMonomial& m) { return m.str(); });
}

PadicScalar breve_pairing_kef(long m, long n, long l, const CoordMonomial& y, const QParams& qp) {
  if (y.d_led) {
    long k = n - y.r;
    if (k != l - y.t || k < 0 || k > y.s) return {};
    return qp.q_pow(k * k) * gaussian_binomial(y.s, k, qp.q_pow(2)) * gamma_constant(y.s, y.r, y.t, m, n, l, qp);
  }
  if (y.r != n || y.t != l) return {};
  return gamma_constant(-y.s, y.r, y.t, m, n, l, qp);
}

PadicScalar uq_pairing_kef(long m, long n, long l, const CoordMonomial& y, const QParams& qp) {
  long mm = 2 * m + n - l;
  PadicScalar corr = qp.half_pow((n - l) - n * (n + 1) - l * (l - 1) + 2 * n * l);
  if (y.d_led) {
    long k = n - y.r;
    if (k != l - y.t || k < 0 || k > y.s) return {};
    return qp.q_pow(k * k) * gaussian_binomial(y.s, k, qp.q_pow(2)) * gamma_constant(y.s, y.r, y.t, mm, n, l, qp) * corr;
  }
  if (y.r != n || y.t != l) return {};
  return gamma_constant(-y.s, y.r, y.t, mm, n, l, qp) * corr;
}

namespace {

template <class Fn>
PadicScalar pair_kef(const QAlgebra& alg, const PBWElement& x, const CoordElement& y, Fn&& fn) {
  PadicScalar s;
  for (const auto& [m, c] : alg.to_kef(x)) {
    for (const auto& [ym, yc] : y) s += c * yc * fn(m.nK, m.nE, m.nF, ym);
  }
  return s;
}

}  // namespace

PadicScalar breve_pairing(const PBWElement& x, const CoordElement& y, const QParams& qp) {
  if (x.variant != Variant::breve) throw StructuralError("breve pairing expects a breve element");
  QAlgebra alg(qp, Variant::breve);
  return pair_kef(alg, x, y, [&](long m, long n, long l, const CoordMonomial& ym) {
    return breve_pairing_kef(m, n, l, ym, qp);
  });
}

PadicScalar uq_pairing(const PBWElement& x, const CoordElement& y, const QParams& qp) {
  if (x.variant == Variant::breve) throw StructuralError("pairing expects a standard element");
  QAlgebra alg(qp, x.variant);
  return pair_kef(alg, x, y, [&](long m, long n, long l, const CoordMonomial& ym) {
    return uq_pairing_kef(m, n, l, ym, qp);
  });
}

PadicScalar uq_pairing_via_breve(const PBWElement& x, const CoordElement& y, const QParams& qp) {
  SLq2 sl(qp);
  CoordElement ty = sl.diagonal_auto(y, PadicScalar(1), PadicScalar(1) / qp.u());
  return breve_pairing(phi(x, qp), ty, qp);
}

PNorm dual_norm(const CoordElement& y, const RadiusSpec& rs, const QParams& qp) {
  PNorm best = PNorm::zero();
  for (const auto& [m, c] : y) best = max(best, qp.norm(c) * PNorm::power(-rs.eE * m.r - rs.eF * m.t));
  return best;
}

PNorm dual_norm_sweep(const CoordElement& y, const RadiusSpec& rs, const QParams& qp, long bound) {
  PNorm best = PNorm::zero();
  std::vector<PNorm> fact(bound + 1, PNorm::one());
  for (long n = 0; n <= bound; ++n) fact[n] = qp.norm(q_factorial(n, qp));
  for (long m = -bound; m <= bound; ++m) {
    for (long n = 0; n <= bound; ++n) {
      for (long l = 0; l <= bound; ++l) {
        PadicScalar v;
        for (const auto& [ym, c] : y) v += c * uq_pairing_kef(m, n, l, ym, qp);
        if (v.is_zero()) continue;
        // K^m E^n F^l differs from E^n K^m F^l by a unit.
        PNorm nu = fact[n] * fact[l] * PNorm::power(rs.eE * n + rs.eF * l);
        best = max(best, qp.norm(v) / nu);
      }
    }
  }
  return best;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::optional<u64> reduce_mod(const PadicScalar& x, u64 m) {
  mpz_class mod(std::to_string(m));
  mpz_class num = x.raw().get_num() % mod;
  if (num < 0) num += mod;
  mpz_class den = x.raw().get_den() % mod;
  if (den == 0) return std::nullopt;
  u64 n = std::stoull(num.get_str());
  u64 d = std::stoull(den.get_str());
  return mulmod(n, powmod(d, m - 2, m), m);
}

long rank_mod(std::vector<std::vector<u64>> mat, u64 m) {
  long rank = 0;
  std::size_t rows = mat.size();
  std::size_t cols = rows ? mat[0].size() : 0;
  for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && mat[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(mat[piv], mat[rank]);
    u64 inv = powmod(mat[rank][col], m - 2, m);
    for (std::size_t j = col; j < cols; ++j) mat[rank][j] = mulmod(mat[rank][j], inv, m);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(rank) || mat[i][col] == 0) continue;
      u64 f = mat[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        mat[i][j] = (mat[i][j] + m - mulmod(f, mat[rank][j], m)) % m;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

GramReport pairing_gram_rank(long deg, const QParams& qp) {
  std::vector<CoordMonomial> rows;
  for (long s = 0; s <= deg; ++s) {
    for (long r = 0; r + s <= deg; ++r) {
      for (long t = 0; t + r + s <= deg; ++t) {
        rows.push_back({false, s, r, t});
        if (s >= 1) rows.push_back({true, s, r, t});
      }
    }
  }
  std::vector<std::array<long, 3>> cols;
  for (long m = -deg; m <= deg; ++m) {
    for (long n = 0; n <= deg; ++n) {
      for (long l = 0; l <= deg; ++l) cols.push_back({m, n, l});
    }
  }
  std::vector<std::vector<PadicScalar>> exact(rows.size(), std::vector<PadicScalar>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      exact[i][j] = uq_pairing_kef(cols[j][0], cols[j][1], cols[j][2], rows[i], qp);
    }
  }
  const u64 primes[] = {2305843009213693951ULL, 4611686018427387847ULL, 1000000000000000003ULL};
  for (u64 mod : primes) {
    std::vector<std::vector<u64>> mat(rows.size(), std::vector<u64>(cols.size()));
    bool ok = true;
    for (std::size_t i = 0; i < rows.size() && ok; ++i) {
      for (std::size_t j = 0; j < cols.size() && ok; ++j) {
        auto v = reduce_mod(exact[i][j], mod);
        if (!v) ok = false;
        else mat[i][j] = *v;
      }
    }
    if (!ok) continue;
    GramReport rep;
    rep.rows = static_cast<long>(rows.size());
    rep.cols = static_cast<long>(cols.size());
    rep.rank = rank_mod(std::move(mat), mod);
    rep.modulus = mod;
    return rep;
  }
  throw StructuralError("no usable modulus for the Gram rank");
}

}  // namespace qhyper
