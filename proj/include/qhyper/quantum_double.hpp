#pragma once

// The skew-pairing of the Borel halves A = U_q(b+) (E, K) and
// B = U_q(b-) (F, K_-), and the quantum double on B (x) A built twice:
// from the pairing-twisted product formula and from cross relations.

#include <array>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qhyper/linear.hpp"
#include "qhyper/pbw.hpp"

namespace qhyper {

/// E^{nE} K^{nK} K_-^{nKm} F^{nF}
struct DoubleMonomial {
  long nE = 0;
  long nK = 0;
  long nKm = 0;
  long nF = 0;
  friend auto operator<=>(const DoubleMonomial&, const DoubleMonomial&) = default;
  long degree() const { return nE + nF; }
  std::string str() const;
};

using DoubleElement = Linear<DoubleMonomial>;
using DoubleTensor = Linear<std::array<DoubleMonomial, 2>>;
/// b (x) a with b in B (keys K_-^j F^l stored as borel- monomials) and
/// a in A (E^n K^m as borel+ monomials).
using BATensor = Linear<std::pair<PBWMonomial, PBWMonomial>>;

/// Slot conventions of the pairing and of the double product.
struct DoubleConvention {
  /// sigma(x x', b) pairs x with b_(2) instead of b_(1).
  bool flip_first = false;
  /// sigma(a, y y') pairs a_(1) with y' instead of y (pairing with B^op).
  bool flip_second = true;
  /// The A-leg of the product is a_(2) a' rather than a' a_(2).
  bool a2_first = true;
  /// sigma-bar sits on the third legs and sigma on the first.
  bool swap_outer = false;

  friend bool operator==(const DoubleConvention&, const DoubleConvention&) = default;
  std::string str() const;
};

/// The convention picked by select_convention(), frozen.
inline constexpr DoubleConvention kDoubleConvention{false, true, true, false};

/// sigma(a, b) for a in A, b in B by recursive generator peeling.
class BorelPairing {
 public:
  BorelPairing(QParams qp, DoubleConvention conv = kDoubleConvention, bool use_memo = true);
  BorelPairing(const BorelPairing& o);

  const QParams& params() const { return qp_; }
  const DoubleConvention& convention() const { return conv_; }

  PadicScalar pair(const PBWMonomial& a, const PBWMonomial& b) const;
  /// Bilinear extension; x must be borel+, y borel-.
  PadicScalar pair(const PBWElement& x, const PBWElement& y) const;
  /// sigma-bar(a, b) = sigma(S_A(a), b).
  PadicScalar pair_bar(const PBWMonomial& a, const PBWMonomial& b) const;
  PadicScalar pair_bar(const PBWElement& x, const PBWElement& y) const;

  const QAlgebra& A() const { return A_; }
  const QAlgebra& B() const { return B_; }

 private:
  PadicScalar compute(const PBWMonomial& a, const PBWMonomial& b) const;

  QParams qp_;
  DoubleConvention conv_;
  bool use_memo_;
  QAlgebra A_;
  QAlgebra B_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<PBWMonomial, PBWMonomial>, PadicScalar> memo_;
};

class QuantumDouble {
 public:
  explicit QuantumDouble(QParams qp, DoubleConvention conv = kDoubleConvention);

  const QParams& params() const { return qp_; }
  const BorelPairing& pairing() const { return pairing_; }

  DoubleElement monomial(const DoubleMonomial& m, const PadicScalar& c = PadicScalar(1)) const;
  DoubleElement scalar(const PadicScalar& c) const { return monomial({}, c); }
  DoubleElement one() const { return scalar(PadicScalar(1)); }
  DoubleElement E() const { return monomial({1, 0, 0, 0}); }
  DoubleElement F() const { return monomial({0, 0, 0, 1}); }
  DoubleElement K(long k = 1) const { return monomial({0, k, 0, 0}); }
  DoubleElement Km(long k = 1) const { return monomial({0, 0, k, 0}); }

  /// Product by rewriting with the Borel and cross relations.
  DoubleElement mul_relations(const DoubleElement& x, const DoubleElement& y) const;
  DoubleElement mul_relations(const DoubleMonomial& x, const DoubleMonomial& y) const;
  /// Product through the pairing-twisted formula on B (x) A.
  DoubleElement mul_formula(const DoubleElement& x, const DoubleElement& y) const;
  DoubleElement mul(const DoubleElement& x, const DoubleElement& y) const { return mul_relations(x, y); }
  DoubleElement pow(const DoubleElement& x, long k) const;

  /// (b (x) a)(b' (x) a') on B (x) A.
  BATensor formula_product(const BATensor& x, const BATensor& y) const;
  /// a b  ->  (1 (x) a)(b (x) 1).
  BATensor to_ba(const DoubleElement& x) const;
  /// Inverse of to_ba, by peeling top-degree terms.
  DoubleElement from_ba(const BATensor& t) const;

  DoubleTensor coproduct(const DoubleElement& x) const;
  PadicScalar counit(const DoubleElement& x) const;
  DoubleElement antipode(const DoubleElement& x) const;
  DoubleTensor tensor_mul(const DoubleTensor& a, const DoubleTensor& b) const;

  /// K_- -> K into U_q(sl2).
  PBWElement quotient(const DoubleElement& x) const;

  std::string str(const DoubleElement& x) const;

 private:
  Linear<DoubleMonomial> f_power_times_e_power(long c, long a) const;

  QParams qp_;
  DoubleConvention conv_;
  BorelPairing pairing_;
  QAlgebra A_;
  QAlgebra B_;
};

/// nu_R on the double: |a| R_E^{nE} R_F^{nF}; K and K_- are norm-neutral.
PNorm double_nu_norm(const DoubleElement& x, const RadiusSpec& rs, const QParams& qp);
PNorm double_tensor_nu_norm(const DoubleTensor& t, const RadiusSpec& rs, const QParams& qp);

struct GradedDefect {
  PNorm commutator_norm = PNorm::zero();
  PNorm product_norm = PNorm::zero();
  bool strict = false;
};

/// nu_R(xy - yx) against nu_R(x) nu_R(y).
GradedDefect graded_commutativity_defect(const QuantumDouble& D, const DoubleElement& x,
                                         const DoubleElement& y, const RadiusSpec& rs);

struct ConventionTrial {
  DoubleConvention convention;
  bool relations_ok = false;
  bool pairing_well_defined = false;
};

/// Runs every slot convention against the defining cross relations and
/// the Borel relations, and returns all trials.
std::vector<ConventionTrial> convention_trials(const QParams& qp);
/// The unique convention passing both tests; throws StructuralError if
/// there is not exactly one.
DoubleConvention select_convention(const QParams& qp);

std::string double_tensor_str(const DoubleTensor& t);

}  // namespace qhyper
