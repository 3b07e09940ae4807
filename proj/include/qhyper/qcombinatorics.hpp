#pragma once

// q-integers, q-factorials, q-binomials, q-Pochhammer symbols and the
// gamma constants of the U_q(sl2)/SL_q(2) pairing.
//
// Convention: [n]_x = (x^n - x^{-n}) / (x - x^{-1}), the balanced q-integer.
// With it (q^2;q^2)_m = [m]_q! (1-q^2)^m q^{m(m-1)/2}.

#include "qhyper/scalar.hpp"

namespace qhyper {

/// [n]_base for n >= 0.
PadicScalar q_integer_base(long n, const PadicScalar& base);
/// [n]_q.
PadicScalar q_integer(long n, const QParams& qp);

/// [n]_q! = [1]_q [2]_q ... [n]_q.
PadicScalar q_factorial(long n, const QParams& qp);
PadicScalar q_factorial_base(long n, const PadicScalar& base);

/// Gaussian binomial [s over k] with q-integers taken in `base`.
/// Throws DomainError when k > s or either is negative.
PadicScalar q_binomial(long s, long k, const PadicScalar& base);

/// Polynomial Gaussian binomial (x;x)_s / ((x;x)_k (x;x)_{s-k}).
/// Equals x^{k(s-k)/2} times the balanced binomial in base x^{1/2}.
PadicScalar gaussian_binomial(long s, long k, const PadicScalar& x);

/// (a; x)_n = (1 - a)(1 - a x) ... (1 - a x^{n-1}).
PadicScalar q_pochhammer(const PadicScalar& a, const PadicScalar& x, long n);

/// gamma^{s r t}_{m n l}
///   = q^{m(s+r-t)/2} q^{-s(n+l)/2} / (q^{n(n-1)/2} q^{l(l-1)/2})
///     * (q^2;q^2)_l (q^2;q^2)_n / (1 - q^2)^{l+n}.
/// s may be negative (the A-led pairing uses gamma^{-s r t}).
PadicScalar gamma_constant(long s, long r, long t, long m, long n, long l, const QParams& qp);

}  // namespace qhyper
