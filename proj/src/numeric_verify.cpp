#include "qestpt/numeric_verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qestpt/errors.hpp"

namespace qestpt {

namespace {

// g = arctan(c tan x) / s with the family constants below
struct FlattenConstants {
    double c;
    double s;
};

FlattenConstants flatten_constants(const DeformingFunction& df)
{
    const double a = df.alpha();
    if (df.kind() == DeformKind::TrigOne) {
        const double c = std::sqrt(1.0 + a);
        return {c, c};
    }
    return {std::sqrt((1.0 - a) / (1.0 + a)), std::sqrt(1.0 - a * a)};
}

struct Tridiagonal {
    Eigen::VectorXd diag;
    double off = 0.0;  // constant off-diagonal -1/h^2
};

// number of eigenvalues strictly below sigma
int sturm_count(const Tridiagonal& T, double sigma)
{
    const double off2 = T.off * T.off;
    const double tiny = std::numeric_limits<double>::min() * 1e3;
    int count = 0;
    double q = 1.0;
    for (Eigen::Index i = 0; i < T.diag.size(); ++i) {
        q = T.diag(i) - sigma - (i == 0 ? 0.0 : off2 / q);
        if (q == 0.0)
            q = -tiny;
        if (q < 0.0)
            ++count;
    }
    return count;
}

double bisect_level(const Tridiagonal& T, int k, double lo, double hi)
{
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        if (sturm_count(T, mid) > k)
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi)))
            break;
    }
    return 0.5 * (lo + hi);
}

Eigen::VectorXd lowest_eigenvalues(const Tridiagonal& T, int n_levels)
{
    const double lo0 = T.diag.minCoeff() - 2.0 * std::abs(T.off);
    double hi0 = lo0 + 1.0;
    while (sturm_count(T, hi0) < n_levels)
        hi0 = lo0 + 2.0 * (hi0 - lo0);
    Eigen::VectorXd out(n_levels);
    for (int k = 0; k < n_levels; ++k)
        out(k) = bisect_level(T, k, k == 0 ? lo0 : out(k - 1), hi0);
    return out;
}

// (T - sigma) y = b by Gaussian elimination with partial pivoting
Eigen::VectorXd tridiagonal_solve(const Tridiagonal& T, double sigma, const Eigen::VectorXd& b)
{
    const Eigen::Index n = T.diag.size();
    Eigen::VectorXd d = T.diag.array() - sigma;
    Eigen::VectorXd up = Eigen::VectorXd::Constant(n, T.off);  // u(i) couples i, i+1
    Eigen::VectorXd up2 = Eigen::VectorXd::Zero(n);             // fill-in from pivoting
    Eigen::VectorXd lo = Eigen::VectorXd::Constant(n, T.off);  // l(i) couples i+1, i
    Eigen::VectorXd rhs = b;
    const double guard = std::numeric_limits<double>::epsilon() * (std::abs(T.diag.maxCoeff()) + std::abs(sigma));
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
        if (std::abs(lo(i)) > std::abs(d(i))) {
            // swap rows i and i+1
            const double nd = lo(i), nu = d(i + 1), nu2 = (i + 1 < n - 1) ? up(i + 1) : 0.0;
            const double od = d(i), ou = up(i), ou2 = up2(i);
            d(i) = nd;
            up(i) = nu;
            up2(i) = nu2;
            std::swap(rhs(i), rhs(i + 1));
            const double m = od / nd;
            d(i + 1) = ou - m * nu;
            if (i + 1 < n - 1)
                up(i + 1) = ou2 - m * nu2;
            rhs(i + 1) -= m * rhs(i);
        } else {
            if (d(i) == 0.0)
                d(i) = guard;
            const double m = lo(i) / d(i);
            d(i + 1) -= m * up(i);
            if (i + 1 < n - 1)
                up(i + 1) -= m * up2(i);
            rhs(i + 1) -= m * rhs(i);
        }
    }
    if (d(n - 1) == 0.0)
        d(n - 1) = guard;
    Eigen::VectorXd y(n);
    for (Eigen::Index i = n - 1; i >= 0; --i) {
        double s = rhs(i);
        if (i + 1 < n)
            s -= up(i) * y(i + 1);
        if (i + 2 < n)
            s -= up2(i) * y(i + 2);
        y(i) = s / d(i);
    }
    return y;
}

Eigen::VectorXd inverse_iteration(const Tridiagonal& T, double lambda, double h)
{
    const Eigen::Index n = T.diag.size();
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i)
        v(i) = 1.0 + 0.1 * std::sin(0.37 * static_cast<double>(i));
    const double sigma = lambda + 1e-10 * std::max(1.0, std::abs(lambda));
    for (int sweep = 0; sweep < 3; ++sweep) {
        v = tridiagonal_solve(T, sigma, v);
        v /= v.norm();
    }
    v /= std::sqrt(h);
    const double vmax = v.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(v(i)) > 1e-8 * vmax) {
            if (v(i) < 0.0)
                v = -v;
            break;
        }
    }
    return v;
}

struct Grid {
    Eigen::VectorXd g;
    Eigen::VectorXd x;
    double h = 0.0;
};

Grid make_grid(const DeformingFunction& df, int N)
{
    const FlattenedDomain dom = flattened_domain(df);
    Grid grid;
    grid.h = dom.width() / (N + 1);
    grid.g.resize(N);
    grid.x.resize(N);
    for (int i = 0; i < N; ++i) {
        grid.g(i) = dom.lower + (i + 1) * grid.h;
        grid.x(i) = mass_unflatten(df, grid.g(i));
    }
    return grid;
}

Tridiagonal assemble(const RealFunction& V, const Grid& grid)
{
    Tridiagonal T;
    const double inv_h2 = 1.0 / (grid.h * grid.h);
    T.off = -inv_h2;
    T.diag.resize(grid.g.size());
    for (Eigen::Index i = 0; i < grid.g.size(); ++i) {
        const double v = V(grid.x(i));
        if (!std::isfinite(v)) {
            std::ostringstream msg;
            msg << "potential is not finite at grid point x = " << grid.x(i);
            throw NumericError(msg.str());
        }
        T.diag(i) = 2.0 * inv_h2 + v;
    }
    return T;
}

}  // namespace

double mass_flatten(const DeformingFunction& df, double x)
{
    const FlattenConstants k = flatten_constants(df);
    return std::atan(k.c * std::tan(x)) / k.s;
}

double mass_unflatten(const DeformingFunction& df, double g)
{
    const FlattenConstants k = flatten_constants(df);
    return std::atan(std::tan(k.s * g) / k.c);
}

FlattenedDomain flattened_domain(const DeformingFunction& df)
{
    const FlattenConstants k = flatten_constants(df);
    const double half = std::numbers::pi / 2 / k.s;
    if (df.kind() == DeformKind::TrigOne)
        return {-half, half};
    return {0.0, half};
}

Eigen::VectorXd NumericSpectrum::psi(int level, const DeformingFunction& df) const
{
    Eigen::VectorXd out(grid_x.size());
    for (Eigen::Index i = 0; i < grid_x.size(); ++i)
        out(i) = eigenvectors(i, level) / std::sqrt(df.f(grid_x(i)));
    return out;
}

NumericSpectrum solve_spectrum(const RealFunction& V, const DeformingFunction& df, int n_levels, int N)
{
    if (N < 64)
        throw DomainError("solve_spectrum needs N >= 64");
    if (n_levels < 1 || n_levels > N / 4)
        throw DomainError("solve_spectrum: n_levels must lie in [1, N/4]");

    const Grid fine = make_grid(df, N);
    const Grid coarse = make_grid(df, N / 2);
    const Tridiagonal Tf = assemble(V, fine);
    const Tridiagonal Tc = assemble(V, coarse);

    NumericSpectrum out;
    out.N = N;
    out.raw = lowest_eigenvalues(Tf, n_levels);
    out.coarse = lowest_eigenvalues(Tc, n_levels);
    const double ratio = coarse.h / fine.h;
    out.eigenvalues = out.raw + (out.raw - out.coarse) / (ratio * ratio - 1.0);
    out.error_estimate = (out.eigenvalues - out.raw).cwiseAbs();
    out.grid_g = fine.g;
    out.grid_x = fine.x;
    out.eigenvectors.resize(N, n_levels);
    for (int k = 0; k < n_levels; ++k)
        out.eigenvectors.col(k) = inverse_iteration(Tf, out.raw(k), fine.h);
    return out;
}

std::vector<double> interior_samples(const DeformingFunction& df, int count, double fraction)
{
    if (count < 2)
        throw DomainError("interior_samples needs at least two points");
    if (!(fraction > 0.0 && fraction < 1.0))
        throw DomainError("interior_samples: fraction must lie in (0, 1)");
    const double half = 0.5 * fraction * df.width();
    const double a = df.midpoint() - half;
    std::vector<double> xs(count);
    for (int i = 0; i < count; ++i)
        xs[i] = a + 2.0 * half * i / (count - 1);
    return xs;
}

double residual(const RealFunction& psi, const RealFunction& V, const DeformingFunction& df, double E,
                const std::vector<double>& samples)
{
    // step near eps^(1/6), the balance point of the 5-point second derivative
    const double h0 = 1e-3 * df.width() / std::numbers::pi;
    double worst = 0.0;
    double scale = 0.0;
    for (const double x : samples) {
        const double dist = std::min(x - df.lower(), df.upper() - x);
        const double h = std::min(h0, 0.2 * dist);
        const double pm2 = psi(x - 2 * h), pm1 = psi(x - h), p0 = psi(x), pp1 = psi(x + h), pp2 = psi(x + 2 * h);
        const double d1 = (pm2 - 8 * pm1 + 8 * pp1 - pp2) / (12 * h);
        const double d2 = (-pm2 + 16 * pm1 - 30 * p0 + 16 * pp1 - pp2) / (12 * h * h);
        const double f = df.f(x), f1 = df.df(x), f2 = df.d2f(x);
        const double kinetic = f * f * d2 + 2 * f * f1 * d1 + (0.25 * f1 * f1 + 0.5 * f * f2) * p0;
        worst = std::max(worst, std::abs(-kinetic + (V(x) - E) * p0));
        scale = std::max(scale, std::abs(p0));
    }
    if (scale == 0.0)
        return std::numeric_limits<double>::infinity();
    return worst / (std::max(1.0, std::abs(E)) * scale);
}

int count_nodes(const Eigen::VectorXd& values)
{
    if (values.size() == 0)
        return 0;
    const double cut = 1e-12 * values.cwiseAbs().maxCoeff();
    int nodes = 0;
    int last = 0;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (std::abs(values(i)) <= cut)
            continue;
        const int s = values(i) > 0 ? 1 : -1;
        if (last != 0 && s != last)
            ++nodes;
        last = s;
    }
    return nodes;
}

double inner_product(const RealFunction& a, const RealFunction& b, const DeformingFunction& df, int points)
{
    if (points < 1001 || points % 2 == 0)
        throw DomainError("inner_product needs an odd number of points, at least 1001");
    const double h = df.width() / (points - 1);
    double sum = 0.0;
    double comp = 0.0;
    for (int i = 1; i < points - 1; ++i) {
        const double x = df.lower() + i * h;
        const double term = (i % 2 == 1 ? 4.0 : 2.0) * a(x) * b(x);
        // Neumaier compensation
        const double t = sum + term;
        comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    return (sum + comp) * h / 3.0;
}

double eigenvector_distance(const NumericSpectrum& spec, int level, const RealFunction& psi,
                            const DeformingFunction& df)
{
    const Eigen::Index n = spec.grid_x.size();
    Eigen::VectorXd closed(n);
    for (Eigen::Index i = 0; i < n; ++i)
        closed(i) = std::sqrt(df.f(spec.grid_x(i))) * psi(spec.grid_x(i));
    const Eigen::VectorXd u = spec.eigenvectors.col(level) / spec.eigenvectors.col(level).norm();
    closed /= closed.norm();
    if (closed.dot(u) < 0.0)
        closed = -closed;
    return (u - closed).norm();
}

}  // namespace qestpt
