#ifndef QESTPT_DSUSY_HPP
#define QESTPT_DSUSY_HPP

#include <functional>
#include <utility>

#include <Eigen/Core>

#include "qestpt/deforming.hpp"
#include "qestpt/laurent.hpp"

namespace qestpt {

using Poly = LaurentPoly<double>;

/// W(x) = sum_k lam_k tan^{2k+1} x - sum_l mu_l cot^{2l+1} x, stored as a
/// Laurent polynomial in tan x together with the domain it lives on.
class TrigLaurentPoly {
public:
    TrigLaurentPoly() = default;
    TrigLaurentPoly(DeformKind domain, Poly series);

    static TrigLaurentPoly from_coefficients(DeformKind domain, const Eigen::VectorXd& lam,
                                             const Eigen::VectorXd& mu = Eigen::VectorXd());

    DeformKind domain() const { return domain_; }
    const Poly& series() const { return series_; }

    /// Coefficients of tan^{2k+1}, k = 0..
    Eigen::VectorXd lam() const;
    /// Coefficients of -cot^{2l+1}, l = 0..
    Eigen::VectorXd mu() const;

    double operator()(double x) const;
    long double evaluate_long(long double x) const;

    friend TrigLaurentPoly operator+(const TrigLaurentPoly& a, const TrigLaurentPoly& b);
    friend TrigLaurentPoly operator-(const TrigLaurentPoly& a, const TrigLaurentPoly& b);
    friend TrigLaurentPoly operator*(double s, const TrigLaurentPoly& a);

private:
    DeformKind domain_ = DeformKind::TrigOne;
    Poly series_;
};

/// Compatible generating functions: f W+' - W+ W- = gap > 0 identically.
struct GeneratingPair {
    TrigLaurentPoly w_plus;
    TrigLaurentPoly w_minus;
    double gap = 0.0;
};

struct SuperpotentialSplit {
    TrigLaurentPoly w;        ///< W  = (W+ - W-) / 2
    TrigLaurentPoly w_prime;  ///< W' = (W+ + W-) / 2
};

enum class PartnerSide { V1, V2 };

/// An even potential re-expressed as constant + sum A_{2k} sec^{2k} + sum B_{2l} csc^{2l}.
struct SecCscExpansion {
    double constant = 0.0;
    Eigen::VectorXd sec;  ///< sec(k-1) multiplies sec^{2k}
    Eigen::VectorXd csc;  ///< csc(l-1) multiplies csc^{2l}

    double operator()(double x) const;
};

/// W- = (f W+' - gap) / W+, accepted only when the division is exact.
/// Throws CompatibilityError (carrying the remainder size) otherwise.
TrigLaurentPoly companion_from_generator(const TrigLaurentPoly& w_plus, const DeformingFunction& df, double gap);

/// The constant f W+' - W+ W-. Checked by coefficient cancellation and by
/// sampling 64 interior points. Throws CompatibilityError if not constant and
/// GapSignError if not positive.
double compatibility_gap(const TrigLaurentPoly& w_plus, const TrigLaurentPoly& w_minus, const DeformingFunction& df);

/// Validates the pair and returns it with its gap attached.
GeneratingPair make_generating_pair(TrigLaurentPoly w_plus, TrigLaurentPoly w_minus, const DeformingFunction& df);

/// Largest |f W+' - W+ W- - gap| over the 64 interior sample points.
double compatibility_residual(const GeneratingPair& pair, const DeformingFunction& df);

/// The interior points used by the sampled compatibility guard.
Eigen::VectorXd compatibility_sample_points(const DeformingFunction& df, int count = 64);

SuperpotentialSplit split_superpotentials(const GeneratingPair& pair);

/// V_{1,2} = W^2 -/+ f W' as an even Laurent polynomial in tan x.
Poly partner_potential(const TrigLaurentPoly& w, const DeformingFunction& df, PartnerSide which);

/// Rewrites an even Laurent polynomial in tan x using tan^2 = sec^2 - 1 and cot^2 = csc^2 - 1.
SecCscExpansion resum_sec_csc(const Poly& even);

/// f^{-1/2} anchor exp(-int_{x_c}^{x} W/f), with x_c the domain midpoint.
double psi0_numeric(const TrigLaurentPoly& w, const DeformingFunction& df, double x, double anchor = 1.0);

/// W+ f^{-1/2} anchor exp(-int_{x_c}^{x} W'/f).
double psi1_numeric(const GeneratingPair& pair, const TrigLaurentPoly& w_prime, const DeformingFunction& df,
                    double x, double anchor = 1.0);

/// int_{x_c}^{x} W/f dx' by adaptive Gauss-Kronrod quadrature.
double integrate_w_over_f(const TrigLaurentPoly& w, const DeformingFunction& df, double x);

struct HermiticityReport {
    bool pass = false;
    double lower_limit = 0.0;   ///< |psi|^2 f approaching the lower endpoint
    double upper_limit = 0.0;   ///< |psi|^2 f approaching the upper endpoint
    double interior_max = 0.0;  ///< max |psi|^2 f on an interior grid
};

/// Estimates lim |psi|^2 f at both ends along x_b -/+ 2^{-j} width/8, j = 0..20.
HermiticityReport hermiticity_boundary_check(const std::function<double(double)>& psi, const DeformingFunction& df);

}  // namespace qestpt

#endif  // QESTPT_DSUSY_HPP
