#include "qestpt/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qestpt {

BigInt double_factorial(int n)
{
    if (n < -1)
        throw DomainError("double_factorial: n = " + std::to_string(n) + " < -1");
    BigInt r = 1;
    for (int k = n; k > 1; k -= 2)
        r *= k;
    return r;
}

double double_factorial_d(int n)
{
    return double_factorial(n).convert_to<double>();
}

BigInt binomial(int n, int k)
{
    if (n < 0)
        throw DomainError("binomial: negative n");
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

double binomial_d(int n, int k)
{
    return binomial(n, k).convert_to<double>();
}

Rational s_sum(const SumIndex& idx)
{
    const auto [m, k, a, b] = idx;
    if (m < 0 || k < 0 || a < 0)
        throw DomainError("s_sum: negative index");
    if (a > b || b > m)
        throw DomainError("s_sum: requires a <= b <= m");
    const BigInt top = double_factorial(2 * m + 1);
    const BigInt num = top * top;
    Rational sum = 0;
    for (int l = a; l <= b; ++l) {
        // double_factorial rejects any argument below -1
        const BigInt den = double_factorial(2 * l + 1) * double_factorial(2 * k - 2 * l - 1)
                           * double_factorial(2 * m - 2 * l) * double_factorial(2 * m - 2 * k + 2 * l + 2);
        sum += Rational(num, den);
    }
    return sum;
}

double s_sum_d(const SumIndex& idx)
{
    return s_sum(idx).convert_to<double>();
}

double accurate_sum(std::vector<double> terms)
{
    std::sort(terms.begin(), terms.end(), [](double x, double y) { return std::abs(x) > std::abs(y); });
    double sum = 0.0;
    double comp = 0.0;
    for (double v : terms) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    return sum + comp;
}

}  // namespace qestpt
