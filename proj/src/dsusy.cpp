#include "qestpt/dsusy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qestpt/combinatorics.hpp"
#include "qestpt/errors.hpp"

namespace qestpt {

TrigLaurentPoly::TrigLaurentPoly(DeformKind domain, Poly series)
    : domain_(domain), series_(std::move(series))
{
    if (domain_ == DeformKind::TrigOne && !series_.empty() && series_.low_exponent() < 0
        && series_.trimmed().low_exponent() < 0)
        throw DomainError("cot terms are not defined on the one-parameter domain");
}

TrigLaurentPoly TrigLaurentPoly::from_coefficients(DeformKind domain, const Eigen::VectorXd& lam,
                                                   const Eigen::VectorXd& mu)
{
    Poly p = Poly::constant(0.0);
    for (Eigen::Index k = 0; k < lam.size(); ++k)
        p.add_term(static_cast<int>(2 * k + 1), lam(k));
    for (Eigen::Index l = 0; l < mu.size(); ++l)
        p.add_term(-static_cast<int>(2 * l + 1), -mu(l));
    return TrigLaurentPoly(domain, p);
}

Eigen::VectorXd TrigLaurentPoly::lam() const
{
    const int hi = series_.empty() ? 0 : series_.high_exponent();
    const int n = hi >= 1 ? (hi - 1) / 2 + 1 : 0;
    Eigen::VectorXd out(n);
    for (int k = 0; k < n; ++k)
        out(k) = series_.coeff(2 * k + 1);
    return out;
}

Eigen::VectorXd TrigLaurentPoly::mu() const
{
    const int lo = series_.empty() ? 0 : series_.low_exponent();
    const int n = lo <= -1 ? (-lo - 1) / 2 + 1 : 0;
    Eigen::VectorXd out(n);
    for (int l = 0; l < n; ++l)
        out(l) = -series_.coeff(-(2 * l + 1));
    return out;
}

double TrigLaurentPoly::operator()(double x) const
{
    return series_(std::tan(x));
}

long double TrigLaurentPoly::evaluate_long(long double x) const
{
    return series_(std::tan(x));
}

TrigLaurentPoly operator+(const TrigLaurentPoly& a, const TrigLaurentPoly& b)
{
    return TrigLaurentPoly(a.domain_, a.series_ + b.series_);
}

TrigLaurentPoly operator-(const TrigLaurentPoly& a, const TrigLaurentPoly& b)
{
    return TrigLaurentPoly(a.domain_, a.series_ - b.series_);
}

TrigLaurentPoly operator*(double s, const TrigLaurentPoly& a)
{
    return TrigLaurentPoly(a.domain_, s * a.series_);
}

double SecCscExpansion::operator()(double x) const
{
    double v = constant;
    if (sec.size() > 0) {
        const double c = std::cos(x);
        const double s2 = 1.0 / (c * c);
        double p = s2;
        for (Eigen::Index k = 0; k < sec.size(); ++k, p *= s2)
            v += sec(k) * p;
    }
    if (csc.size() > 0) {
        const double s = std::sin(x);
        const double c2 = 1.0 / (s * s);
        double p = c2;
        for (Eigen::Index l = 0; l < csc.size(); ++l, p *= c2)
            v += csc(l) * p;
    }
    return v;
}

namespace {

void require_same_domain(const TrigLaurentPoly& p, const DeformingFunction& df)
{
    if (p.domain() != df.kind())
        throw DomainError("superpotential and deforming function live on different domains");
}

}  // namespace

TrigLaurentPoly companion_from_generator(const TrigLaurentPoly& w_plus, const DeformingFunction& df, double gap)
{
    require_same_domain(w_plus, df);
    if (!(gap > 0.0))
        throw DomainError("companion_from_generator: gap must be positive");
    const Poly den = w_plus.series().trimmed();
    if (den.empty())
        throw DomainError("companion_from_generator: W+ is identically zero");

    Poly num = f_derivative(w_plus.series(), df);
    num.add_term(0, -gap);

    // Clear negative powers so both sides are ordinary polynomials with den(0) != 0.
    const int a = -num.low_exponent();
    const int b = -den.low_exponent();
    const Poly p = num.shifted(a);
    const Poly q = den.shifted(b);
    const auto [quot, rem] = divide(p, q);

    const double scale = std::max(1.0, p.max_abs_coeff());
    const double residual = rem.max_abs_coeff();
    if (residual > 1e-10 * scale) {
        std::ostringstream msg;
        msg << "W+ and gap " << gap << " are not compatible: division remainder " << residual;
        throw CompatibilityError(msg.str(), residual);
    }
    const Poly w_minus = quot.shifted(b - a).trimmed(1e-14 * std::max(1.0, quot.max_abs_coeff()));
    return TrigLaurentPoly(df.kind(), w_minus.empty() ? Poly::constant(0.0) : w_minus);
}

Eigen::VectorXd compatibility_sample_points(const DeformingFunction& df, int count)
{
    // central 60% of the domain keeps tan/cot powers moderate
    Eigen::VectorXd xs(count);
    for (int i = 0; i < count; ++i)
        xs(i) = df.lower() + df.width() * (0.2 + 0.6 * (i + 0.5) / count);
    return xs;
}

namespace {

// f W+' - W+ W- in extended precision at one point.
long double sampled_constant(const Poly& dw_plus, const TrigLaurentPoly& w_plus, const TrigLaurentPoly& w_minus,
                             const DeformingFunction& df, long double x)
{
    const long double t = std::tan(x);
    const long double f = df.kind() == DeformKind::TrigOne
                              ? 1.0L + df.alpha() * std::sin(x) * std::sin(x)
                              : 1.0L + df.alpha() * std::cos(2.0L * x);
    return f * dw_plus(t) - w_plus.series()(t) * w_minus.series()(t);
}

}  // namespace

double compatibility_gap(const TrigLaurentPoly& w_plus, const TrigLaurentPoly& w_minus, const DeformingFunction& df)
{
    require_same_domain(w_plus, df);
    require_same_domain(w_minus, df);

    const Poly fdw = f_derivative(w_plus.series(), df);
    const Poly prod = w_plus.series() * w_minus.series();
    const Poly rest = fdw - prod;
    const double c = rest.coeff(0);

    const double scale = std::max({1.0, fdw.max_abs_coeff(), prod.max_abs_coeff()});
    double nonconst = 0.0;
    for (int e = rest.low_exponent(); !rest.empty() && e <= rest.high_exponent(); ++e)
        if (e != 0)
            nonconst = std::max(nonconst, std::abs(rest.coeff(e)));
    if (nonconst > 1e-10 * scale) {
        std::ostringstream msg;
        msg << "f W+' - W+ W- is not constant: largest non-constant coefficient " << nonconst;
        throw CompatibilityError(msg.str(), nonconst);
    }

    const Poly dw = x_derivative(w_plus.series());
    const Eigen::VectorXd xs = compatibility_sample_points(df);
    long double lo = std::numeric_limits<long double>::max();
    long double hi = std::numeric_limits<long double>::lowest();
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
        const long double v = sampled_constant(dw, w_plus, w_minus, df, xs(i));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double spread = static_cast<double>(hi - lo);
    if (!(spread < 1e-10 * std::max(1.0, std::abs(c)))) {
        std::ostringstream msg;
        msg << "f W+' - W+ W- varies by " << spread << " over interior samples";
        throw CompatibilityError(msg.str(), spread);
    }
    if (!(c > 0.0))
        throw GapSignError("compatibility constant is not positive", c);
    return c;
}

GeneratingPair make_generating_pair(TrigLaurentPoly w_plus, TrigLaurentPoly w_minus, const DeformingFunction& df)
{
    const double gap = compatibility_gap(w_plus, w_minus, df);
    return {std::move(w_plus), std::move(w_minus), gap};
}

double compatibility_residual(const GeneratingPair& pair, const DeformingFunction& df)
{
    const Poly dw = x_derivative(pair.w_plus.series());
    const Eigen::VectorXd xs = compatibility_sample_points(df);
    long double worst = 0.0L;
    for (Eigen::Index i = 0; i < xs.size(); ++i) {
        const long double v = sampled_constant(dw, pair.w_plus, pair.w_minus, df, xs(i));
        worst = std::max(worst, std::abs(v - static_cast<long double>(pair.gap)));
    }
    return static_cast<double>(worst);
}

SuperpotentialSplit split_superpotentials(const GeneratingPair& pair)
{
    return {0.5 * (pair.w_plus - pair.w_minus), 0.5 * (pair.w_plus + pair.w_minus)};
}

Poly partner_potential(const TrigLaurentPoly& w, const DeformingFunction& df, PartnerSide which)
{
    require_same_domain(w, df);
    const Poly& s = w.series();
    const Poly fdw = f_derivative(s, df);
    return which == PartnerSide::V1 ? s * s - fdw : s * s + fdw;
}

SecCscExpansion resum_sec_csc(const Poly& even)
{
    SecCscExpansion out;
    if (even.empty())
        return out;
    for (int e = even.low_exponent(); e <= even.high_exponent(); ++e)
        if (e % 2 != 0 && even.coeff(e) != 0.0)
            throw DomainError("resum_sec_csc: odd power of tan x in potential");

    const int top_a = std::max(even.high_exponent(), 0) / 2;
    const int top_b = std::max(-even.low_exponent(), 0) / 2;
    // tan^{2l} = (sec^2 - 1)^l, cot^{2l} = (csc^2 - 1)^l
    out.sec = Eigen::VectorXd::Zero(top_a);
    out.csc = Eigen::VectorXd::Zero(top_b);
    std::vector<double> constant_terms{even.coeff(0)};
    for (int k = 1; k <= top_a; ++k) {
        std::vector<double> terms;
        for (int l = k; l <= top_a; ++l)
            terms.push_back(((l - k) % 2 == 0 ? 1.0 : -1.0) * binomial_d(l, k) * even.coeff(2 * l));
        out.sec(k - 1) = accurate_sum(terms);
        constant_terms.push_back((k % 2 == 0 ? 1.0 : -1.0) * even.coeff(2 * k));
    }
    for (int k = 1; k <= top_b; ++k) {
        std::vector<double> terms;
        for (int l = k; l <= top_b; ++l)
            terms.push_back(((l - k) % 2 == 0 ? 1.0 : -1.0) * binomial_d(l, k) * even.coeff(-2 * l));
        out.csc(k - 1) = accurate_sum(terms);
        constant_terms.push_back((k % 2 == 0 ? 1.0 : -1.0) * even.coeff(-2 * k));
    }
    out.constant = accurate_sum(constant_terms);
    return out;
}

double integrate_w_over_f(const TrigLaurentPoly& w, const DeformingFunction& df, double x)
{
    require_same_domain(w, df);
    df.value(x);  // domain check
    const double xc = df.midpoint();
    if (x == xc)
        return 0.0;
    auto integrand = [&](double s) { return w(s) / df.f(s); };
    double error = 0.0;
    double l1 = 0.0;
    const double q = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(integrand, xc, x, 30, 1e-13,
                                                                                  &error, &l1);
    // absolute 1e-12, relaxed in proportion once |Q| is large enough that
    // double spacing alone exceeds it
    if (!std::isfinite(q) || error > std::max(1e-12, 2e-13 * l1)) {
        std::ostringstream msg;
        msg << "quadrature of W/f did not converge at x = " << x << " (error estimate " << error << ")";
        throw NumericError(msg.str());
    }
    return q;
}

double psi0_numeric(const TrigLaurentPoly& w, const DeformingFunction& df, double x, double anchor)
{
    const double q = integrate_w_over_f(w, df, x);
    return anchor * std::exp(-q) / std::sqrt(df.f(x));
}

double psi1_numeric(const GeneratingPair& pair, const TrigLaurentPoly& w_prime, const DeformingFunction& df,
                    double x, double anchor)
{
    const double q = integrate_w_over_f(w_prime, df, x);
    return anchor * pair.w_plus(x) * std::exp(-q) / std::sqrt(df.f(x));
}

HermiticityReport hermiticity_boundary_check(const std::function<double(double)>& psi, const DeformingFunction& df)
{
    auto density = [&](double x) {
        const double v = psi(x);
        const double d = v * v * df.f(x);
        return std::isfinite(d) ? d : std::numeric_limits<double>::infinity();
    };

    HermiticityReport rep;
    constexpr int interior_points = 401;
    for (int i = 1; i < interior_points; ++i)
        rep.interior_max = std::max(rep.interior_max, density(df.lower() + df.width() * i / interior_points));

    // the tail of the geometric approach is the limit estimate
    constexpr int steps = 20;
    constexpr int tail = 5;
    const double base = df.width() / 8.0;
    for (int j = steps - tail + 1; j <= steps; ++j) {
        const double d = std::ldexp(base, -j);
        rep.lower_limit = std::max(rep.lower_limit, density(df.lower() + d));
        rep.upper_limit = std::max(rep.upper_limit, density(df.upper() - d));
    }
    const double thresh = 1e-8 * rep.interior_max;
    rep.pass = std::isfinite(rep.interior_max) && rep.interior_max > 0.0 && rep.lower_limit < thresh
               && rep.upper_limit < thresh;
    return rep;
}

}  // namespace qestpt
