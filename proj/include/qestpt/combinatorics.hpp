#ifndef QESTPT_COMBINATORICS_HPP
#define QESTPT_COMBINATORICS_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qestpt/errors.hpp"

namespace qestpt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n!! with 0!! = (-1)!! = 1. Throws DomainError for n < -1.
BigInt double_factorial(int n);

/// Convenience: n!! as a double (exact up to 2^53).
double double_factorial_d(int n);

/// C(n, k), zero outside 0 <= k <= n. Throws DomainError for n < 0.
BigInt binomial(int n, int k);

double binomial_d(int n, int k);

/// Indices of the finite sums S^{(m,k)}_{a,b}.
struct SumIndex {
    int m = 0;
    int k = 0;
    int a = 0;
    int b = 0;
};

/// S^{(m,k)}_{a,b} = sum_{l=a}^{b} [(2m+1)!!]^2 /
///     [(2l+1)!! (2k-2l-1)!! (2m-2l)!! (2m-2k+2l+2)!!]
/// evaluated exactly.
Rational s_sum(const SumIndex& idx);

/// s_sum converted to double at the boundary.
double s_sum_d(const SumIndex& idx);

/// F(n, k; z) = sum_{p=0}^{n} (-1)^p C(k, p) z^p, requires k > n.
template <typename Scalar>
Scalar f_poly(int n, int k, Scalar z)
{
    if (n < 0 || k <= n)
        throw DomainError("f_poly: requires 0 <= n < k");
    Scalar sum(0);
    Scalar zp(1);
    for (int p = 0; p <= n; ++p) {
        const Scalar term = binomial_d(k, p) * zp;
        sum += (p % 2 == 0) ? term : -term;
        zp *= z;
    }
    return sum;
}

/// Gegenbauer C_n^{(lam)}(t) by forward recurrence.
template <typename Scalar>
Scalar gegenbauer(int n, Scalar lam, Scalar t)
{
    if (n < 0)
        throw DomainError("gegenbauer: negative degree");
    Scalar c0(1);
    if (n == 0)
        return c0;
    Scalar c1 = Scalar(2) * lam * t;
    for (int k = 2; k <= n; ++k) {
        // k C_k = 2 t (k + lam - 1) C_{k-1} - (k + 2 lam - 2) C_{k-2}
        const Scalar c2 = (Scalar(2) * t * (k + lam - 1) * c1 - (k + Scalar(2) * lam - 2) * c0) / Scalar(k);
        c0 = c1;
        c1 = c2;
    }
    return c1;
}

/// Jacobi P_n^{(a,b)}(t) by forward recurrence. Requires a, b > -1.
template <typename Scalar>
Scalar jacobi(int n, Scalar a, Scalar b, Scalar t)
{
    if (n < 0)
        throw DomainError("jacobi: negative degree");
    if (!(a > Scalar(-1)) || !(b > Scalar(-1)))
        throw DomainError("jacobi: requires a, b > -1");
    Scalar p0(1);
    if (n == 0)
        return p0;
    Scalar p1 = (a + 1) + (a + b + 2) * (t - 1) / Scalar(2);
    for (int k = 2; k <= n; ++k) {
        const Scalar s = Scalar(2 * k) + a + b;
        const Scalar c1 = Scalar(2 * k) * (k + a + b) * (s - 2);
        const Scalar c2 = (s - 1) * (a * a - b * b);
        const Scalar c3 = (s - 2) * (s - 1) * s;
        const Scalar c4 = Scalar(2) * (k + a - 1) * (k + b - 1) * s;
        const Scalar p2 = ((c2 + c3 * t) * p1 - c4 * p0) / c1;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

/// Compensated (Neumaier) summation over terms sorted by decreasing magnitude.
double accurate_sum(std::vector<double> terms);

}  // namespace qestpt

#endif  // QESTPT_COMBINATORICS_HPP
