#include <doctest.h>

#include <random>

#include "../oracles/oracles.hpp"
#include "qhyper/quantum_double.hpp"

using namespace qhyper;

namespace {

const QParams kQp = QParams::defaults();

DoubleMonomial random_monomial(std::mt19937_64& rng) {
  return {static_cast<long>(rng() % 3), static_cast<long>(rng() % 3) - 1, static_cast<long>(rng() % 3) - 1,
          static_cast<long>(rng() % 3)};
}

}  // namespace

TEST_CASE("Borel pairing values") {
  BorelPairing s(kQp);
  PBWMonomial one{}, E{1, 0, 0}, K{0, 1, 0}, F{0, 0, 1}, Km{0, 1, 0};
  CHECK(s.pair(K, Km) == kQp.q_pow(-2));
  CHECK(s.pair(one, one) == PadicScalar(1));
  CHECK(s.pair(E, F) == PadicScalar(1) / (kQp.q_inv() - kQp.q()));
  CHECK(s.pair(E, Km).is_zero());
  CHECK(s.pair_bar(K, Km) == kQp.q_pow(2));
  CHECK(s.pair_bar(one, F).is_zero());
  CHECK(s.pair_bar(one, Km) == PadicScalar(1));
}

TEST_CASE("Borel pairing against the full-expansion oracle") {
  BorelPairing memo(kQp), plain(kQp, kDoubleConvention, false);
  oracle::BorelPairingOracle ref(kQp);
  PBWMonomial E2{2, 0, 0}, F2{0, 0, 2};
  CHECK(memo.pair(E2, F2) == ref.pair(E2, F2));
  for (long nE = 0; nE <= 3; ++nE) {
    for (long nK = -2; nK <= 2; ++nK) {
      for (long j = -2; j <= 2; ++j) {
        for (long nF = 0; nF <= 3; ++nF) {
          PBWMonomial a{nE, nK, 0}, b{0, j, nF};
          PadicScalar v = memo.pair(a, b);
          CHECK(v == ref.pair(a, b));
          CHECK(v == plain.pair(a, b));
        }
      }
    }
  }
}

TEST_CASE("sigma and sigma-bar are convolution inverse") {
  BorelPairing s(kQp);
  const QAlgebra& A = s.A();
  const QAlgebra& B = s.B();
  std::vector<PBWMonomial> as = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {2, 1, 0}};
  std::vector<PBWMonomial> bs = {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, -1, 1}, {0, 1, 2}};
  for (const auto& a : as) {
    for (const auto& b : bs) {
      PadicScalar conv;
      for (const auto& [ka, ca] : A.coproduct(A.monomial(a)).terms) {
        for (const auto& [kb, cb] : B.coproduct(B.monomial(b)).terms) {
          conv += ca * cb * s.pair(ka[0], kb[0]) * s.pair_bar(ka[1], kb[1]);
        }
      }
      CHECK(conv == A.counit(A.monomial(a)) * B.counit(B.monomial(b)));
    }
  }
}

TEST_CASE("cross relations of the double") {
  QuantumDouble D(kQp);
  PadicScalar inv = kQp.inv_q_minus_qinv();
  DoubleElement comm = D.mul(D.E(), D.F()) - D.mul(D.F(), D.E());
  CHECK(comm == (D.K() - D.Km(-1)).scaled(inv));
  CHECK(D.mul(D.Km(), D.E()) == D.mul(D.E(), D.Km()).scaled(kQp.q_pow(2)));
  CHECK(D.mul(D.K(), D.Km()) == D.mul(D.Km(), D.K()));
  CHECK(D.mul(D.K(), D.Km()) == D.monomial({0, 1, 1, 0}));
  CHECK(D.mul(D.K(), D.F()) == D.mul(D.F(), D.K()).scaled(kQp.q_pow(-2)));
}

TEST_CASE("formula and relation engines") {
  QuantumDouble D(kQp);
  CHECK(D.mul_formula(D.F(), D.E()) == D.mul_relations(D.F(), D.E()));
  CHECK(D.mul_formula(D.E(), D.K()) == D.monomial({1, 1, 0, 0}));
  std::mt19937_64 rng(71);
  for (int i = 0; i < 60; ++i) {
    DoubleMonomial x = random_monomial(rng), y = random_monomial(rng);
    CHECK(D.mul_formula(D.monomial(x), D.monomial(y)) == D.mul_relations(x, y));
  }
  CHECK(select_convention(kQp) == kDoubleConvention);
}

TEST_CASE("Hopf structure of the double") {
  QuantumDouble D(kQp);
  DoubleTensor kk({DoubleMonomial{0, 1, 0, 0}, DoubleMonomial{0, 1, 0, 0}}, PadicScalar(1));
  CHECK(D.coproduct(D.K()) == kk);
  CHECK(D.antipode(D.Km()) == D.Km(-1));
  for (const auto& g : {D.E(), D.F(), D.K(), D.Km(), D.Km(-1)}) {
    DoubleElement contracted;
    for (const auto& [k, c] : D.coproduct(g)) {
      contracted += D.mul(D.antipode(D.monomial(k[0])), D.monomial(k[1])).scaled(c);
    }
    CHECK(contracted == D.scalar(D.counit(g)));
  }
}

TEST_CASE("quotient onto U_q(sl2)") {
  QuantumDouble D(kQp);
  QAlgebra U(kQp, Variant::standard);
  CHECK(D.quotient(D.K() - D.Km()).is_zero());
  DoubleElement comm = D.mul(D.E(), D.F()) - D.mul(D.F(), D.E());
  CHECK(D.quotient(comm) == kQp.inv_q_minus_qinv() * (U.K() - U.K(-1)));
  std::mt19937_64 rng(73);
  for (int i = 0; i < 40; ++i) {
    auto x = D.monomial(random_monomial(rng)), y = D.monomial(random_monomial(rng));
    CHECK(D.quotient(D.mul(x, y)) == U.mul(D.quotient(x), D.quotient(y)));
  }
}

TEST_CASE("graded commutativity defect") {
  QuantumDouble D(kQp);
  RadiusSpec rs{2, 2, 0};
  auto g = graded_commutativity_defect(D, D.E(), D.K(), rs);
  CHECK(g.commutator_norm == kQp.norm(PadicScalar(1) - kQp.q_pow(2)) * PNorm::power(2));
  CHECK(g.product_norm == PNorm::power(2));
  CHECK(g.strict);
  auto z = graded_commutativity_defect(D, D.E(), D.E(), rs);
  CHECK(z.commutator_norm.is_zero());
}
