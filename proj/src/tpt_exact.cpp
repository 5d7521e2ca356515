#include "qestpt/tpt_exact.hpp"

#include <cmath>

#include "qestpt/combinatorics.hpp"
#include "qestpt/errors.hpp"

namespace qestpt {

ExactOneParam ExactOneParam::make(double A, double alpha)
{
    if (!(A > 1.0))
        throw DomainError("one-parameter TPT requires A > 1");
    DeformingFunction::trig_one(alpha);
    ExactOneParam p;
    p.A = A;
    p.alpha = alpha;
    p.delta = std::sqrt((1.0 + alpha) * (1.0 + alpha) + 4.0 * A * (A - 1.0));
    p.lambda = 0.5 * (1.0 + alpha + p.delta);
    p.lambda_prime = p.lambda + 1.0 + alpha;
    return p;
}

double ExactOneParam::potential(double x) const
{
    const double c = std::cos(x);
    return A * (A - 1.0) / (c * c);
}

TrigLaurentPoly ExactOneParam::superpotential() const
{
    return TrigLaurentPoly(DeformKind::TrigOne, Poly::monomial(1, lambda));
}

TrigLaurentPoly ExactOneParam::superpotential_prime() const
{
    return TrigLaurentPoly(DeformKind::TrigOne, Poly::monomial(1, lambda_prime));
}

ExactTwoParam ExactTwoParam::make(double A, double B, double alpha)
{
    if (!(A > 1.0) || !(B > 1.0))
        throw DomainError("two-parameter TPT requires A, B > 1");
    DeformingFunction::trig_two(alpha);
    ExactTwoParam p;
    p.A = A;
    p.B = B;
    p.alpha = alpha;
    p.delta1 = std::sqrt((1.0 - alpha) * (1.0 - alpha) + 4.0 * A * (A - 1.0));
    p.delta2 = std::sqrt((1.0 + alpha) * (1.0 + alpha) + 4.0 * B * (B - 1.0));
    p.lambda = 0.5 * (1.0 - alpha + p.delta1);
    p.mu = 0.5 * (1.0 + alpha + p.delta2);
    p.lambda_prime = p.lambda + 1.0 - alpha;
    p.mu_prime = p.mu + 1.0 + alpha;
    return p;
}

double ExactTwoParam::potential(double x) const
{
    const double c = std::cos(x);
    const double s = std::sin(x);
    return A * (A - 1.0) / (c * c) + B * (B - 1.0) / (s * s);
}

TrigLaurentPoly ExactTwoParam::superpotential() const
{
    Poly p = Poly::monomial(1, lambda);
    p.add_term(-1, -mu);
    return TrigLaurentPoly(DeformKind::TrigTwo, p);
}

TrigLaurentPoly ExactTwoParam::superpotential_prime() const
{
    Poly p = Poly::monomial(1, lambda_prime);
    p.add_term(-1, -mu_prime);
    return TrigLaurentPoly(DeformKind::TrigTwo, p);
}

double energy_one_param(const ExactOneParam& p, int n)
{
    if (n < 0)
        throw DomainError("energy level index must be nonnegative");
    const double l = p.lambda;
    return (l + n) * (l + n) - p.alpha * (l - static_cast<double>(n) * n);
}

double wavefn_one_param(const ExactOneParam& p, int n, double x)
{
    const DeformingFunction df = p.deform();
    const double f = df.value(x).f;
    const double s = p.lambda / (1.0 + p.alpha);
    const double t = std::sqrt((1.0 + p.alpha) / f) * std::sin(x);
    const double log_env = -0.5 * (s + 1.0) * std::log(f) + s * std::log(std::cos(x));
    return std::exp(log_env) * gegenbauer(n, s, t);
}

double energy_two_param(const ExactTwoParam& p, int n)
{
    if (n < 0)
        throw DomainError("energy level index must be nonnegative");
    const double a = p.alpha;
    const double sum = p.lambda + p.mu + 2.0 * n;
    return sum * sum + 2.0 * a * (p.lambda - p.mu) * (2.0 * n + 1.0) - 4.0 * a * a * n * n;
}

double jacobi_argument(double alpha, double x)
{
    const double c2 = std::cos(2.0 * x);
    return (c2 + alpha) / (1.0 + alpha * c2);
}

double wavefn_two_param(const ExactTwoParam& p, int n, double x)
{
    const DeformingFunction df = p.deform();
    const double f = df.value(x).f;
    const double sa = p.lambda / (1.0 - p.alpha);
    const double sb = p.mu / (1.0 + p.alpha);
    const double log_env = -0.5 * (1.0 + sa + sb) * std::log(f) + sa * std::log(std::cos(x)) + sb * std::log(std::sin(x));
    return std::exp(log_env) * jacobi(n, sb - 0.5, sa - 0.5, jacobi_argument(p.alpha, x));
}

}  // namespace qestpt
