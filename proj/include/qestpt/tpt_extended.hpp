#ifndef QESTPT_TPT_EXTENDED_HPP
#define QESTPT_TPT_EXTENDED_HPP

#include <Eigen/Core>

#include "qestpt/deforming.hpp"
#include "qestpt/dsusy.hpp"
#include "qestpt/wavefunction.hpp"

namespace qestpt {

/// E0 and potential coefficients recovered by expanding W^2 - f W' in
/// powers of tan^2 x (and cot^2 x) and resumming into sec/csc powers.
struct ExpansionResult {
    double E0 = 0.0;
    double gap = 0.0;
    Eigen::VectorXd A;  ///< A(k-1) = A_{2k}
    Eigen::VectorXd B;  ///< B(l-1) = B_{2l}, empty for the one-parameter family
};

// ---------------------------------------------------------------------------
// One-parameter family: V = sum_{k=1}^{2m+1} A_{2k} sec^{2k} x,
// f = 1 + alpha sin^2 x.
// ---------------------------------------------------------------------------

struct ExtendedOneParamSpec {
    int m = 1;
    double A_top = 1.0;  ///< A_{4m+2}
    double alpha = 0.0;
    DeformingFunction deform = DeformingFunction::trig_one(0.0);

    Eigen::VectorXd lambda;        ///< lambda_k, k = 0..m
    Eigen::VectorXd lambda_prime;  ///< lambda'_k
    Eigen::VectorXd A;             ///< A(k-1) = A_{2k}, k = 1..2m+1
    Eigen::VectorXd C;             ///< C(kappa) = C_{2 kappa + 1}, kappa = 0..m
    double E0 = 0.0;
    double E1 = 0.0;
    double gap = 0.0;

    GeneratingPair pair;
    ClosedFormWavefunction psi0_form;
    ClosedFormWavefunction psi1_form;

    /// Largest scaled disagreement between the closed forms and the expansion.
    double dual_path_discrepancy = 0.0;

    bool undeformed() const { return alpha == 0.0; }
    SecCscExpansion potential_expansion() const;
    double potential(double x) const;
    TrigLaurentPoly superpotential() const;
    TrigLaurentPoly superpotential_prime() const;
};

/// Generating functions W+ and W- of the one-parameter family, validated.
GeneratingPair generating_pair_one_param(int m, double A_top, double alpha);

/// Closed-form lambda_k (first) and lambda'_k (second).
std::pair<Eigen::VectorXd, Eigen::VectorXd> lambda_one_param(int m, double A_top, double alpha);

/// Closed-form E0 with the S sums.
double ground_energy_one_param(int m, double A_top, double alpha);

/// Closed-form A_{2k}, k = 1..2m+1.
Eigen::VectorXd coefficients_one_param(int m, double A_top, double alpha);

/// E1 - E0 = 2 sqrt(A_top) (2m+1)!!/(2m)!! (1+alpha)^{-m}.
double gap_one_param(int m, double A_top, double alpha);

/// C_{2 kappa + 1} from the lambda ladder.
Eigen::VectorXd c_coefficients_one_param(int m, const Eigen::VectorXd& lambda, double alpha);

/// Coefficients of sin^{2k+1} x, k = 0..m, in the first-excited prefactor.
Eigen::VectorXd psi1_prefactor_one_param(int m, double alpha);

ExpansionResult expand_and_resum_one_param(int m, double A_top, double alpha);

/// Requires m >= 1, A_top > 0, alpha > -1. Throws ConsistencyError if the
/// closed forms and the expansion disagree beyond 1e-9.
ExtendedOneParamSpec build_one_param(int m, double A_top, double alpha);

double psi0_closed_one_param(const ExtendedOneParamSpec& spec, double x);
double psi1_closed_one_param(const ExtendedOneParamSpec& spec, double x);

// ---------------------------------------------------------------------------
// Two-parameter family: V = sum A_{2k} sec^{2k} x + sum B_{2l} csc^{2l} x,
// f = 1 + alpha cos 2x.
// ---------------------------------------------------------------------------

struct TwoParamFamily {
    int m1 = 1;
    int m2 = 1;
    double A_top = 1.0;  ///< A_{4 m1 + 2}
    double B_top = 1.0;  ///< B_{4 m2 + 2}; B_2 itself when m2 = 0
    double alpha = 0.0;
};

struct ExtendedTwoParamSpec {
    TwoParamFamily requested;
    /// Orientation used internally, always m1 >= m2. Equals `requested`
    /// unless the input had m1 < m2, which is reflected by x -> pi/2 - x.
    TwoParamFamily canonical;
    bool reflected = false;

    /// sqrt(B_top) or, when m2 = 0, 1 + alpha + delta/2.
    double sqrt_b = 0.0;
    /// sqrt((1+alpha)^2 + 4 B_2); only meaningful when m2 = 0.
    double delta_b = 0.0;

    DeformingFunction deform = DeformingFunction::trig_two(0.0);

    // canonical orientation
    Eigen::VectorXd lambda, lambda_prime;
    Eigen::VectorXd mu, mu_prime;
    Eigen::VectorXd A;  ///< A(k-1) = A_{2k}
    Eigen::VectorXd B;  ///< B(l-1) = B_{2l}
    Eigen::VectorXd C;  ///< C(p-1) = C_p, p = 1..m1+1
    Eigen::VectorXd D;  ///< D(q-1) = D_q, q = 1..m2+1
    double E0 = 0.0;
    double E1 = 0.0;
    double gap = 0.0;

    GeneratingPair pair;
    ClosedFormWavefunction psi0_form;
    ClosedFormWavefunction psi1_form;
    double dual_path_discrepancy = 0.0;

    bool undeformed() const { return canonical.alpha == 0.0; }

    /// Coefficients in the caller's orientation.
    Eigen::VectorXd sec_coefficients() const { return reflected ? B : A; }
    Eigen::VectorXd csc_coefficients() const { return reflected ? A : B; }

    SecCscExpansion potential_expansion() const;  ///< caller's orientation
    DeformingFunction user_deform() const { return DeformingFunction::trig_two(requested.alpha); }
    double potential(double x) const;
    double psi0(double x) const;
    double psi1(double x) const;
};

/// Generating functions of the canonical (m1 >= m2) family. For m2 = 0,
/// sqrt(B_2) is replaced by 1 + alpha + delta/2.
GeneratingPair generating_pair_two_param(const TwoParamFamily& canonical);

/// Closed-form E0 and coefficients for m1 >= m2 (>= 0), with sqrt_b as the
/// effective sqrt(B_top).
struct TwoParamClosedForms {
    double E0 = 0.0;
    double gap = 0.0;
    Eigen::VectorXd A;
    Eigen::VectorXd B;
};
TwoParamClosedForms closed_forms_two_param(int m1, int m2, double sqrt_a, double sqrt_b, double alpha);

/// F-sum prefactor of psi_1 as coefficients of sin^{2k} x, k = 0..m1+m2+1.
Eigen::VectorXd psi1_prefactor_two_param(int m1, int m2, double sqrt_a, double sqrt_b, double alpha);

ExpansionResult expand_and_resum_two_param(int m1, int m2, double A_top, double B_top, double alpha);

/// Requires m1, m2 >= 0 (not both zero), tops > 0, |alpha| < 1.
ExtendedTwoParamSpec build_two_param(int m1, int m2, double A_top, double B_top, double alpha);

/// C_p and D_q of the canonical orientation.
std::pair<Eigen::VectorXd, Eigen::VectorXd> cd_coefficients(const ExtendedTwoParamSpec& spec);

double psi0_closed_two_param(const ExtendedTwoParamSpec& spec, double x);
double psi1_closed_two_param(const ExtendedTwoParamSpec& spec, double x);

/// W+ cos^{cos_power} x sin^{sin_power} x as a polynomial in sin^2 x; `odd`
/// reports a leftover overall sin x factor.
Eigen::VectorXd generator_prefactor(const TrigLaurentPoly& w_plus, int cos_power, int sin_power, bool& odd);

}  // namespace qestpt

#endif  // QESTPT_TPT_EXTENDED_HPP
