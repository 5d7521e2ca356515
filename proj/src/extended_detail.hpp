#ifndef QESTPT_EXTENDED_DETAIL_HPP
#define QESTPT_EXTENDED_DETAIL_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Core>

namespace qestpt::detail {

inline double sign_pow(int k)
{
    return (k % 2 == 0) ? 1.0 : -1.0;
}

/// Collects the terms of one alternating sum; resolved with accurate_sum.
using Terms = std::vector<double>;

/// max |a - b| over E0 and the coefficient arrays, relative to the array scale.
inline double scaled_discrepancy(const std::vector<double>& closed, const std::vector<double>& expanded)
{
    double scale = 1.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < closed.size(); ++i) {
        scale = std::max(scale, std::abs(closed[i]));
        worst = std::max(worst, std::abs(closed[i] - expanded[i]));
    }
    return worst / scale;
}

inline void append(std::vector<double>& out, const Eigen::VectorXd& v)
{
    out.insert(out.end(), v.data(), v.data() + v.size());
}

}  // namespace qestpt::detail

#endif  // QESTPT_EXTENDED_DETAIL_HPP
