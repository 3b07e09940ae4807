#pragma once

// Named invariant suites. Each check sweeps a finite range exhaustively or
// draws from a seeded generator, and reports counts of cases and failures.

#include <cstdint>
#include <string>
#include <vector>

#include "qhyper/pbw.hpp"
#include "qhyper/scalar.hpp"

namespace qhyper {

struct CheckResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string detail;
  double seconds = 0;
  bool passed() const { return failures == 0 && cases > 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// hopf, double, second, weierstrass, norms, bounded, duality, factorial,
/// graded, routes.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite (in parallel) for "all".
std::vector<SuiteReport> run_suite(const std::string& name, const QParams& qp, const RadiusSpec& rs,
                                   std::uint64_t seed = 20240611);

// Individual checks, with the sizes spelled out.

/// Coassociativity, counit and antipode axioms on monomials with
/// nE + |nK| + nF <= max_deg.
CheckResult check_hopf_pbw(const QParams& qp, Variant v, long max_deg);
/// Same for the double, degree nE + |nK| + |nK_-| + nF.
CheckResult check_hopf_double(const QParams& qp, long max_deg);
/// Same for SL_q(2), degree s + r + t, both monomial families.
CheckResult check_hopf_slq2(const QParams& qp, long max_deg);
/// det_q central in M_q(2), group-like, and equal to 1 in SL_q(2).
CheckResult check_det_q(const QParams& qp, long max_deg);

/// Formula and relation engines agree on monomial pairs with
/// deg x + deg y <= max_total.
CheckResult check_double_engines(const QParams& qp, long max_total);
/// EF - FE = (K - K_-^{-1}) / (q - q^{-1}) and the other cross relations.
CheckResult check_double_relations(const QParams& qp);
/// The frozen convention is the one the search selects.
CheckResult check_double_convention(const QParams& qp);
/// quotient(xy) = quotient(x) quotient(y) and compatibility with Hopf maps.
CheckResult check_quotient(const QParams& qp, long max_deg);

/// Tower products against PBW products on random monomial pairs.
CheckResult check_second_construction(const QParams& qp, const RadiusSpec& rs, long pairs, std::uint64_t seed);

/// Random regular f of degree 1..4; base "L" or "Uh".
CheckResult check_weierstrass(const QParams& qp, const std::string& base, long count, long floor_exp,
                              std::uint64_t seed);

/// Multiplicativity of the Gauss norm on the Borel halves and the double,
/// submultiplicativity on U_q(sl2), the breve algebra and skew series.
CheckResult check_norm_laws(const QParams& qp, const RadiusSpec& rs, long pairs, std::uint64_t seed);

/// nu(Delta x) <= nu(x), |eps x| <= nu(x), nu(S x) <= nu(x) at R_K = 1 over
/// a sweep of radii, on monomials of degree <= max_deg.
CheckResult check_hopf_bounds(const QParams& qp, long max_deg);
/// |<a, b>| <= nu(a) nu(b) for the Borel pairing when R > |1/(q^{-1} - q)|.
CheckResult check_pairing_bound(const QParams& qp, long max_deg);

/// |gamma| = 1 for all indices in [0, max_index] with q = (1+p)^2.
CheckResult check_gamma_unit(const std::vector<long>& primes, long max_index);
/// |gamma| = |[n]_q!| |[l]_q!| over the same range.
CheckResult check_gamma_norm_identity(const std::vector<long>& primes, long max_index);
/// |<K^m E^n F^l, a^s c^r b^t>| = delta_rn delta_tl |[n]!| |[l]!|.
CheckResult check_pairing_norms(const QParams& qp, long max_index);
/// Closed-form dual norms on basis monomials and the truncated supremum.
CheckResult check_dual_norms(const QParams& qp, const RadiusSpec& rs, long max_rt, long sweep_bound);
/// Hopf pairing laws for the U_q pairing and the breve pairing.
CheckResult check_duality_axioms(const QParams& qp, long max_deg);
/// Gram matrix of the pairing has full rank.
CheckResult check_gram_rank(const QParams& qp, long deg);

/// v_p([n]_q!) = v_p(n!) (Legendre) and v_p([n]_q!) <= n/(p-1).
CheckResult check_factorial(const std::vector<long>& primes, long max_n);
/// (q^2;q^2)_m = [m]_q! (1-q^2)^m q^{m(m-1)/2}.
CheckResult check_pochhammer_identity(const QParams& qp, long max_m);

/// nu(xy - yx) < nu(x) nu(y) for distinct double monomials of degree <= max_deg.
CheckResult check_graded(const QParams& qp, const RadiusSpec& rs, long max_deg);

/// uq_pairing against the phi/theta breve route.
CheckResult check_routes(const QParams& qp, long max_deg);

std::string format_report(const SuiteReport& r);

}  // namespace qhyper
