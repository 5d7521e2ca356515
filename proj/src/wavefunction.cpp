#include "qestpt/wavefunction.hpp"

#include <cmath>

namespace qestpt {

double ClosedFormWavefunction::log_envelope(double x) const
{
    const double c = std::cos(x);
    const double s = std::sin(x);
    double log_v = f_exponent * std::log(deform.f(x));
    if (cos_exponent != 0.0)
        log_v += cos_exponent * std::log(std::abs(c));
    if (sin_exponent != 0.0)
        log_v += sin_exponent * std::log(std::abs(s));
    const double sec2 = 1.0 / (c * c);
    for (const auto& [k, a] : sec_terms)
        log_v -= a * std::pow(sec2, k);
    const double csc2 = 1.0 / (s * s);
    for (const auto& [l, b] : csc_terms)
        log_v -= b * std::pow(csc2, l);
    return log_v;
}

double ClosedFormWavefunction::prefactor_value(double x) const
{
    const double s = std::sin(x);
    const double s2 = s * s;
    double p = 0.0;
    for (Eigen::Index k = prefactor.size() - 1; k >= 0; --k)
        p = p * s2 + prefactor(k);
    return odd_sin_factor ? p * s : p;
}

double ClosedFormWavefunction::operator()(double x) const
{
    deform.value(x);
    const double log_v = log_envelope(x);
    const double p = prefactor_value(x);
    if (p == 0.0)
        return 0.0;
    return p * std::exp(log_v);
}

}  // namespace qestpt
