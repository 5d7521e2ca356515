#ifndef QESTPT_TESTS_SUPPORT_HPP
#define QESTPT_TESTS_SUPPORT_HPP

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "qestpt/deforming.hpp"
#include "qestpt/numeric_verify.hpp"

namespace testing_support {

inline double rel_diff(double a, double b)
{
    return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// samples of psi on `n` points strictly inside the domain
inline Eigen::VectorXd on_grid(const qestpt::RealFunction& psi, const qestpt::DeformingFunction& df, int n)
{
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i)
        v(i) = psi(df.lower() + df.width() * (i + 1) / (n + 1));
    return v;
}

inline std::vector<double> random_points(const qestpt::DeformingFunction& df, int n, double fraction,
                                         unsigned seed)
{
    std::mt19937 gen(seed);
    const double half = 0.5 * fraction * df.width();
    std::uniform_real_distribution<double> u(df.midpoint() - half, df.midpoint() + half);
    std::vector<double> xs(n);
    for (double& x : xs)
        x = u(gen);
    return xs;
}

// largest deviation of a(x)/b(x) from its value at x_ref
inline double ratio_mismatch(const qestpt::RealFunction& a, const qestpt::RealFunction& b,
                             const std::vector<double>& xs, double x_ref)
{
    const double c = a(x_ref) / b(x_ref);
    double worst = 0.0;
    for (const double x : xs) {
        const double bx = b(x);
        if (bx == 0.0)
            continue;
        worst = std::max(worst, std::abs(a(x) / bx / c - 1.0));
    }
    return worst;
}

}  // namespace testing_support

#endif
