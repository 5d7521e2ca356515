#ifndef QESTPT_WAVEFUNCTION_HPP
#define QESTPT_WAVEFUNCTION_HPP

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qestpt/deforming.hpp"

namespace qestpt {

/// psi(x) = f^{fExp} cos^{cosExp} x sin^{sinExp} x
///          * exp(-sum_k a_k sec^{2k} x - sum_l b_l csc^{2l} x)
///          * [sin x]^{odd} * P(sin^2 x)
///
/// The envelope is evaluated in log space so that boundary-adjacent points
/// underflow to zero instead of producing inf * 0.
struct ClosedFormWavefunction {
    DeformingFunction deform = DeformingFunction::trig_one(0.0);
    double f_exponent = 0.0;
    double cos_exponent = 0.0;
    double sin_exponent = 0.0;
    std::vector<std::pair<int, double>> sec_terms;  ///< (k, a_k)
    std::vector<std::pair<int, double>> csc_terms;  ///< (l, b_l)
    Eigen::VectorXd prefactor = Eigen::VectorXd::Ones(1);  ///< coefficients in sin^2 x
    bool odd_sin_factor = false;

    /// DomainError outside the open interval.
    double operator()(double x) const;

    double log_envelope(double x) const;
    double prefactor_value(double x) const;
};

}  // namespace qestpt

#endif  // QESTPT_WAVEFUNCTION_HPP
