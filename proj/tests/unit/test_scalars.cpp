#include <doctest.h>

#include <random>

#include "../oracles/oracles.hpp"
#include "qhyper/errors.hpp"
#include "qhyper/qcombinatorics.hpp"
#include "qhyper/scalar.hpp"

using namespace qhyper;

namespace {

PadicScalar random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-3000, 3000), den(1, 3000);
  return PadicScalar(num(rng), den(rng));
}

}  // namespace

TEST_CASE("valuations of simple scalars") {
  CHECK(valuation(PadicScalar(5), 5) == Valuation(1));
  CHECK(valuation(PadicScalar(1, 25), 5) == Valuation(-2));
  CHECK(valuation(PadicScalar(0), 5).is_infinite());
  CHECK(valuation(PadicScalar(-250, 7), 5) == Valuation(3));
  CHECK(padic_norm(PadicScalar(50), 5) == PNorm::power(-2));
  CHECK(padic_norm(PadicScalar(0), 5).is_zero());
  CHECK(PNorm::power(3).str(5) == "5^3");
}

TEST_CASE("norm is multiplicative and ultrametric") {
  std::mt19937_64 rng(7);
  for (long p : {3L, 5L, 7L}) {
    for (int i = 0; i < 400; ++i) {
      PadicScalar x = random_rational(rng), y = random_rational(rng);
      CHECK(padic_norm(x * y, p) == padic_norm(x, p) * padic_norm(y, p));
      PNorm nx = padic_norm(x, p), ny = padic_norm(y, p), ns = padic_norm(x + y, p);
      CHECK(ns <= max(nx, ny));
      if (nx != ny) CHECK(ns == max(nx, ny));
    }
  }
}

TEST_CASE("scalar parsing and printing") {
  CHECK(PadicScalar::parse("-6/4") == PadicScalar(-3, 2));
  CHECK(PadicScalar(-3, 2).str() == "-3/2");
  CHECK(PadicScalar(4).wire() == "4/1");
  CHECK_THROWS(PadicScalar::parse("1/0"));
  CHECK_THROWS(PadicScalar::parse("x"));
}

TEST_CASE("p-adic rounding") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    PadicScalar x = random_rational(rng);
    for (long m : {-3L, 0L, 4L, 12L}) {
      PadicScalar r = round_padic(x, 5, m);
      bool close = (x - r).is_zero() || valuation(x - r, 5).value() >= m;
      CHECK(close);
    }
  }
  CHECK(round_padic(PadicScalar(125), 5, 3).is_zero());
  CHECK(residue_mod_p(PadicScalar(-1), 5) == 4);
  CHECK(residue_mod_p(PadicScalar(1, 2), 5) == 3);
}

TEST_CASE("deformation parameters") {
  QParams qp = QParams::defaults();
  CHECK(qp.q() == PadicScalar(36));
  CHECK(qp.q_inv() == PadicScalar(1, 36));
  CHECK(qp.half_pow(1) == PadicScalar(6));
  CHECK(qp.half_pow(-3) == PadicScalar(1, 216));
  CHECK(qp.norm(qp.q() - 1) < PNorm::one());
  CHECK_THROWS_AS(QParams(4, PadicScalar(5)), ConfigError);
  CHECK_THROWS_AS(QParams(5, PadicScalar(5)), ConfigError);
  CHECK_THROWS_AS(QParams(5, PadicScalar(2)), ConfigError);
}

TEST_CASE("q-integers") {
  QParams qp = QParams::defaults();
  CHECK(q_integer(0, qp).is_zero());
  CHECK(q_integer(1, qp) == PadicScalar(1));
  CHECK(q_integer(2, qp) == PadicScalar(1297, 36));
  for (long n = 1; n < 12; ++n) {
    PadicScalar direct = (qp.q().pow(n) - qp.q().pow(-n)) / (qp.q() - qp.q_inv());
    CHECK(q_integer(n, qp) == direct);
  }
}

TEST_CASE("q-factorials, binomials and Pochhammer symbols") {
  QParams qp = QParams::defaults();
  PadicScalar q2 = qp.q_pow(2);
  CHECK(q_pochhammer(PadicScalar(7), q2, 0) == PadicScalar(1));
  for (long m = 0; m <= 10; ++m) {
    PadicScalar rhs = q_factorial(m, qp) * (PadicScalar(1) - q2).pow(m) * qp.q_pow(m * (m - 1) / 2);
    CHECK(q_pochhammer(q2, q2, m) == rhs);
  }
  CHECK(q_binomial(5, 0, qp.q()) == PadicScalar(1));
  CHECK(q_binomial(5, 2, qp.q()) == q_factorial(5, qp) / (q_factorial(2, qp) * q_factorial(3, qp)));
  CHECK_THROWS_AS(q_binomial(2, 3, qp.q()), DomainError);
  // Pascal rule for the polynomial binomial.
  for (long s = 1; s < 8; ++s) {
    for (long k = 1; k < s; ++k) {
      CHECK(gaussian_binomial(s, k, q2) ==
            gaussian_binomial(s - 1, k - 1, q2) + q2.pow(k) * gaussian_binomial(s - 1, k, q2));
    }
  }
}

TEST_CASE("valuation of q-factorials matches Legendre") {
  for (long p : {3L, 5L, 7L}) {
    QParams qp(p, PadicScalar(1 + p));
    PadicScalar f(1);
    for (long n = 1; n <= 100; ++n) {
      f *= q_integer(n, qp);
      CHECK(qp.val(f).value() == oracle::legendre(n, p));
    }
  }
}

TEST_CASE("gamma constants") {
  QParams qp = QParams::defaults();
  CHECK(gamma_constant(0, 0, 0, 0, 0, 0, qp) == PadicScalar(1));
  CHECK(gamma_constant(3, 1, 2, 0, 0, 0, qp) == PadicScalar(1));
  CHECK(gamma_constant(0, 1, 0, 1, 1, 0, qp) == qp.u());
  // Direct evaluation of the defining product for a generic index.
  long s = 2, r = 1, t = 3, m = -1, n = 2, l = 1;
  PadicScalar q2 = qp.q_pow(2);
  PadicScalar expect = qp.half_pow(m * (s + r - t)) * qp.half_pow(-s * (n + l)) /
                       (qp.q_pow(n * (n - 1) / 2) * qp.q_pow(l * (l - 1) / 2)) * q_pochhammer(q2, q2, l) *
                       q_pochhammer(q2, q2, n) / (PadicScalar(1) - q2).pow(l + n);
  CHECK(gamma_constant(s, r, t, m, n, l, qp) == expect);
}
