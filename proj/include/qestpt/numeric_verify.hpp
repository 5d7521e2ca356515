#ifndef QESTPT_NUMERIC_VERIFY_HPP
#define QESTPT_NUMERIC_VERIFY_HPP

#include <functional>
#include <vector>

#include <Eigen/Core>

#include "qestpt/deforming.hpp"

namespace qestpt {

using RealFunction = std::function<double(double)>;

/// Coordinate g with dg/dx = 1/f. In g the deformed operator acting on
/// psi becomes -d^2/dg^2 + V acting on u = sqrt(f) psi.
double mass_flatten(const DeformingFunction& df, double x);
double mass_unflatten(const DeformingFunction& df, double g);

struct FlattenedDomain {
    double lower = 0.0;
    double upper = 0.0;
    double width() const { return upper - lower; }
};
FlattenedDomain flattened_domain(const DeformingFunction& df);

struct NumericSpectrum {
    /// Richardson-extrapolated eigenvalues from the N and N/2 grids.
    Eigen::VectorXd eigenvalues;
    Eigen::VectorXd raw;     ///< plain finite-difference values on N points
    Eigen::VectorXd coarse;  ///< same on N/2 points
    Eigen::VectorXd error_estimate;

    Eigen::VectorXd grid_g;
    Eigen::VectorXd grid_x;
    /// Column k is u_k on grid_g, unit norm in the g measure, positive at its
    /// first non-negligible sample.
    Eigen::MatrixXd eigenvectors;
    int N = 0;

    /// psi = u / sqrt(f) on grid_x.
    Eigen::VectorXd psi(int level, const DeformingFunction& df) const;
};

/// Lowest n_levels eigenvalues of the flattened problem by Sturm bisection on
/// a uniform interior grid of N points with Dirichlet ends. N >= 64.
NumericSpectrum solve_spectrum(const RealFunction& V, const DeformingFunction& df, int n_levels, int N = 4000);

/// Points evenly spread over the central `fraction` of the x domain.
std::vector<double> interior_samples(const DeformingFunction& df, int count, double fraction = 0.9);

/// max |H psi - E psi| / (max(1,|E|) max |psi|) over the samples, with H the
/// deformed operator and derivatives of psi by 5-point central differences.
double residual(const RealFunction& psi, const RealFunction& V, const DeformingFunction& df, double E,
                const std::vector<double>& samples);

/// Strict sign changes, ignoring samples below 1e-12 of the largest magnitude.
int count_nodes(const Eigen::VectorXd& values);

/// Composite Simpson integral of a*b dx on `points` (odd, >= 1001) nodes;
/// the endpoints contribute zero.
double inner_product(const RealFunction& a, const RealFunction& b, const DeformingFunction& df, int points = 4001);

/// Normalized L2 distance between eigenvector `level` and sqrt(f) psi, in
/// the g measure (equal to the dx measure on psi).
double eigenvector_distance(const NumericSpectrum& spec, int level, const RealFunction& psi,
                            const DeformingFunction& df);

}  // namespace qestpt

#endif  // QESTPT_NUMERIC_VERIFY_HPP
