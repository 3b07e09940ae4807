#include "qhyper/qcombinatorics.hpp"

#include "qhyper/errors.hpp"

namespace qhyper {

PadicScalar q_integer_base(long n, const PadicScalar& base) {
  if (n < 0) throw DomainError("q-integer of a negative index");
  // sum_{i=0}^{n-1} base^{n-1-2i}
  PadicScalar acc;
  if (n == 0) return acc;
  PadicScalar inv = PadicScalar(1) / base;
  PadicScalar inv2 = inv * inv;
  PadicScalar term = base.pow(n - 1);
  for (long i = 0; i < n; ++i) {
    acc += term;
    term *= inv2;
  }
  return acc;
}

PadicScalar q_integer(long n, const QParams& qp) { return q_integer_base(n, qp.q()); }

PadicScalar q_factorial_base(long n, const PadicScalar& base) {
  if (n < 0) throw DomainError("q-factorial of a negative index");
  PadicScalar acc(1);
  for (long k = 1; k <= n; ++k) acc *= q_integer_base(k, base);
  return acc;
}

PadicScalar q_factorial(long n, const QParams& qp) { return q_factorial_base(n, qp.q()); }

PadicScalar q_binomial(long s, long k, const PadicScalar& base) {
  if (s < 0 || k < 0 || k > s) {
    throw DomainError("q-binomial needs 0 <= k <= s");
  }
  // Product form avoids three full factorials.
  PadicScalar acc(1);
  for (long i = 1; i <= k; ++i) {
    acc *= q_integer_base(s - k + i, base);
    acc /= q_integer_base(i, base);
  }
  return acc;
}

PadicScalar gaussian_binomial(long s, long k, const PadicScalar& x) {
  if (s < 0 || k < 0 || k > s) {
    throw DomainError("Gaussian binomial needs 0 <= k <= s");
  }
  PadicScalar acc(1);
  for (long i = 1; i <= k; ++i) {
    acc *= PadicScalar(1) - x.pow(s - k + i);
    acc /= PadicScalar(1) - x.pow(i);
  }
  return acc;
}

PadicScalar q_pochhammer(const PadicScalar& a, const PadicScalar& x, long n) {
  if (n < 0) throw DomainError("q-Pochhammer of negative length");
  PadicScalar acc(1);
  PadicScalar ax = a;
  for (long i = 0; i < n; ++i) {
    acc *= PadicScalar(1) - ax;
    ax *= x;
  }
  return acc;
}

PadicScalar gamma_constant(long s, long r, long t, long m, long n, long l, const QParams& qp) {
  if (n < 0 || l < 0 || r < 0 || t < 0) {
    throw DomainError("gamma constant needs n, l, r, t >= 0");
  }
  // Exponent of q^{1/2}.
  long half = m * (s + r - t) - s * (n + l) - n * (n - 1) - l * (l - 1);
  PadicScalar q2 = qp.q() * qp.q();
  PadicScalar value = qp.half_pow(half);
  value *= q_pochhammer(q2, q2, l);
  value *= q_pochhammer(q2, q2, n);
  value /= (PadicScalar(1) - q2).pow(l + n);
  return value;
}

}  // namespace qhyper
