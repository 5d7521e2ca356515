#ifndef QESTPT_TPT_EXACT_HPP
#define QESTPT_TPT_EXACT_HPP

#include "qestpt/deforming.hpp"
#include "qestpt/dsusy.hpp"

namespace qestpt {

/// V = A(A-1) sec^2 x with f = 1 + alpha sin^2 x.
struct ExactOneParam {
    double A = 2.0;
    double alpha = 0.0;
    double delta = 0.0;         ///< sqrt((1+alpha)^2 + 4A(A-1))
    double lambda = 0.0;        ///< (1 + alpha + delta) / 2
    double lambda_prime = 0.0;  ///< lambda + 1 + alpha

    /// Requires A > 1 and alpha > -1.
    static ExactOneParam make(double A, double alpha);

    DeformingFunction deform() const { return DeformingFunction::trig_one(alpha); }
    bool undeformed() const { return alpha == 0.0; }
    double potential(double x) const;
    TrigLaurentPoly superpotential() const;
    TrigLaurentPoly superpotential_prime() const;
};

/// V = A(A-1) sec^2 x + B(B-1) csc^2 x with f = 1 + alpha cos 2x.
struct ExactTwoParam {
    double A = 2.0;
    double B = 2.0;
    double alpha = 0.0;
    double delta1 = 0.0;  ///< sqrt((1-alpha)^2 + 4A(A-1))
    double delta2 = 0.0;  ///< sqrt((1+alpha)^2 + 4B(B-1))
    double lambda = 0.0;
    double mu = 0.0;
    double lambda_prime = 0.0;
    double mu_prime = 0.0;

    /// Requires A, B > 1 and |alpha| < 1.
    static ExactTwoParam make(double A, double B, double alpha);

    DeformingFunction deform() const { return DeformingFunction::trig_two(alpha); }
    bool undeformed() const { return alpha == 0.0; }
    double potential(double x) const;
    TrigLaurentPoly superpotential() const;
    TrigLaurentPoly superpotential_prime() const;
};

/// E_n = (lambda + n)^2 - alpha (lambda - n^2).
double energy_one_param(const ExactOneParam& p, int n);

/// Un-normalized psi_n = f^{-(s+1)/2} cos^s x C_n^{(s)}(t), s = lambda/(1+alpha),
/// t = sqrt((1+alpha)/f) sin x.
double wavefn_one_param(const ExactOneParam& p, int n, double x);

/// E_n = (lambda + mu + 2n)^2 + 2 alpha (lambda - mu)(2n+1) - 4 alpha^2 n^2.
double energy_two_param(const ExactTwoParam& p, int n);

/// Un-normalized psi_n with a Jacobi polynomial in t = (cos 2x + alpha)/(1 + alpha cos 2x).
double wavefn_two_param(const ExactTwoParam& p, int n, double x);

/// The Jacobi argument t(x) of wavefn_two_param.
double jacobi_argument(double alpha, double x);

}  // namespace qestpt

#endif  // QESTPT_TPT_EXACT_HPP
