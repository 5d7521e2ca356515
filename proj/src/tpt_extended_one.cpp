#include <cmath>
#include <sstream>

#include "extended_detail.hpp"
#include "qestpt/combinatorics.hpp"
#include "qestpt/errors.hpp"
#include "qestpt/tpt_extended.hpp"

namespace qestpt {

using detail::sign_pow;
using detail::Terms;

namespace {

void validate_one_param(int m, double A_top, double alpha)
{
    if (m == 0)
        throw DomainError("m = 0 is the exactly solvable baseline; use ExactOneParam");
    if (m < 0)
        throw DomainError("one-parameter extension requires m >= 1");
    if (!(A_top > 0.0) || !std::isfinite(A_top))
        throw DomainError("one-parameter extension requires A_{4m+2} > 0");
    DeformingFunction::trig_one(alpha);
}

// (2m+1)!! / [(2k+1)!! (2m-2k)!!]
double ladder_ratio(int m, int k)
{
    return (Rational(double_factorial(2 * m + 1), double_factorial(2 * k + 1) * double_factorial(2 * m - 2 * k)))
        .convert_to<double>();
}

// (2m+1)!! / [(2l-1)!! (2m-2l+2)!!]
double shifted_ratio(int m, int l)
{
    return (Rational(double_factorial(2 * m + 1), double_factorial(2 * l - 1) * double_factorial(2 * m - 2 * l + 2)))
        .convert_to<double>();
}

// S-sum block shared by E0 and the A_{2k}: index k picks the range of l.
double s_block(int m, int k)
{
    if (k <= m + 1)
        return s_sum_d({m, k, 0, k - 1});
    return s_sum_d({m, k, k - m - 1, m});
}

}  // namespace

GeneratingPair generating_pair_one_param(int m, double A_top, double alpha)
{
    validate_one_param(m, A_top, alpha);
    const DeformingFunction df = DeformingFunction::trig_one(alpha);
    const double sa = std::sqrt(A_top);
    const double a1 = 1.0 + alpha;
    Poly wp = Poly::constant(0.0);
    for (int k = 0; k <= m; ++k)
        wp.add_term(2 * k + 1, 2.0 * sa * ladder_ratio(m, k) * std::pow(a1, k - m));
    const Poly wm = Poly::monomial(1, (2 * m + 1) * a1);
    return make_generating_pair(TrigLaurentPoly(DeformKind::TrigOne, wp), TrigLaurentPoly(DeformKind::TrigOne, wm),
                                df);
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> lambda_one_param(int m, double A_top, double alpha)
{
    validate_one_param(m, A_top, alpha);
    const double sa = std::sqrt(A_top);
    const double a1 = 1.0 + alpha;
    Eigen::VectorXd lam(m + 1);
    for (int k = 1; k <= m; ++k)
        lam(k) = sa * ladder_ratio(m, k) * std::pow(a1, k - m);
    lam(0) = sa * (double_factorial_d(2 * m + 1) / double_factorial_d(2 * m)) * std::pow(a1, -m)
             - 0.5 * (2 * m + 1) * a1;
    Eigen::VectorXd lam_p = lam;
    lam_p(0) = lam(0) + (2 * m + 1) * a1;
    return {lam, lam_p};
}

double gap_one_param(int m, double A_top, double alpha)
{
    validate_one_param(m, A_top, alpha);
    return 2.0 * std::sqrt(A_top) * (double_factorial_d(2 * m + 1) / double_factorial_d(2 * m))
           * std::pow(1.0 + alpha, -m);
}

double ground_energy_one_param(int m, double A_top, double alpha)
{
    validate_one_param(m, A_top, alpha);
    const double sa = std::sqrt(A_top);
    const double a1 = 1.0 + alpha;
    const double lead = double_factorial_d(2 * m + 1) / double_factorial_d(2 * m);

    Terms bracket{1.0};
    for (int k = 1; k <= m + 1; ++k) {
        const double r = (Rational(double_factorial(2 * m), double_factorial(2 * k - 1) * double_factorial(2 * m - 2 * k + 2)))
                             .convert_to<double>();
        bracket.push_back(2.0 * (2 * m + 1) * sign_pow(k) * r * std::pow(a1, k));
    }
    Terms s_terms;
    for (int k = 1; k <= 2 * m + 1; ++k)
        s_terms.push_back(sign_pow(k) * s_block(m, k) * std::pow(a1, k - 1));

    Terms total{0.25 * (2 * m + 1) * a1 * (2 * m + 1 + (2 * m + 3) * alpha),
                sa * lead * std::pow(a1, -m) * accurate_sum(bracket),
                -A_top * std::pow(a1, -2 * m) * accurate_sum(s_terms)};
    return accurate_sum(total);
}

Eigen::VectorXd coefficients_one_param(int m, double A_top, double alpha)
{
    validate_one_param(m, A_top, alpha);
    const double sa = std::sqrt(A_top);
    const double a1 = 1.0 + alpha;
    Eigen::VectorXd A = Eigen::VectorXd::Zero(2 * m + 1);

    {
        Terms lin;
        Terms quad;
        for (int k = 1; k <= m + 1; ++k)
            lin.push_back(2.0 * (2 * m + 1) * sa * sign_pow(k) * k * shifted_ratio(m, k) * std::pow(a1, k - m));
        for (int k = 1; k <= 2 * m + 1; ++k)
            quad.push_back(sign_pow(k) * k * s_block(m, k) * std::pow(a1, k - 1));
        A(0) = accurate_sum({0.25 * (2 * m + 1) * (2 * m + 3) * a1 * a1, accurate_sum(lin),
                             -A_top * std::pow(a1, -2 * m) * accurate_sum(quad)});
    }
    for (int k = 2; k <= m + 1; ++k) {
        Terms lin;
        Terms quad;
        for (int l = k; l <= m + 1; ++l)
            lin.push_back(-2.0 * (2 * m + 1) * sa * sign_pow(l - k) * binomial_d(l, k) * shifted_ratio(m, l)
                          * std::pow(a1, l - m));
        for (int l = k; l <= 2 * m + 1; ++l)
            quad.push_back(sign_pow(l - k) * binomial_d(l, k) * s_block(m, l) * std::pow(a1, l - 1));
        A(k - 1) = accurate_sum({accurate_sum(lin), A_top * std::pow(a1, -2 * m) * accurate_sum(quad)});
    }
    for (int k = m + 2; k <= 2 * m; ++k) {
        Terms quad;
        for (int l = k; l <= 2 * m + 1; ++l)
            quad.push_back(sign_pow(l - k) * binomial_d(l, k) * s_block(m, l) * std::pow(a1, l - 2 * m - 1));
        A(k - 1) = A_top * accurate_sum(quad);
    }
    A(2 * m) = A_top;
    return A;
}

Eigen::VectorXd c_coefficients_one_param(int m, const Eigen::VectorXd& lambda, double alpha)
{
    const double a1 = 1.0 + alpha;
    Eigen::VectorXd C(m + 1);
    for (int kappa = 0; kappa <= m; ++kappa) {
        Terms outer;
        for (int p = 0; p <= m - kappa; ++p) {
            Terms inner;
            for (int l = 0; l <= p; ++l)
                inner.push_back(sign_pow(l) * binomial_d(l + m - p, l) * lambda(l + m - p));
            outer.push_back(std::pow(alpha, m - kappa - p) * std::pow(a1, p) * accurate_sum(inner));
        }
        C(kappa) = accurate_sum(outer) / std::pow(a1, m + 1 - kappa);
    }
    return C;
}

Eigen::VectorXd psi1_prefactor_one_param(int m, double alpha)
{
    const double a1 = 1.0 + alpha;
    Eigen::VectorXd P(m + 1);
    for (int k = 0; k <= m; ++k) {
        Terms t;
        for (int l = 0; l <= k; ++l)
            t.push_back(sign_pow(k - l) * binomial_d(m - l, k - l) * ladder_ratio(m, l) * std::pow(a1, l - m));
        P(k) = accurate_sum(t);
    }
    return P;
}

ExpansionResult expand_and_resum_one_param(int m, double A_top, double alpha)
{
    const GeneratingPair pair = generating_pair_one_param(m, A_top, alpha);
    const DeformingFunction df = DeformingFunction::trig_one(alpha);
    const SuperpotentialSplit split = split_superpotentials(pair);
    const SecCscExpansion v = resum_sec_csc(partner_potential(split.w, df, PartnerSide::V1));
    ExpansionResult out;
    // V1 = V - E0 and V carries no constant term
    out.E0 = -v.constant;
    out.gap = pair.gap;
    out.A = Eigen::VectorXd::Zero(2 * m + 1);
    out.A.head(std::min<Eigen::Index>(v.sec.size(), 2 * m + 1)) = v.sec.head(std::min<Eigen::Index>(v.sec.size(), 2 * m + 1));
    return out;
}

Eigen::VectorXd generator_prefactor(const TrigLaurentPoly& w_plus, int cos_power, int sin_power, bool& odd)
{
    // tan^e cos^a sin^b = sin^{e+b} cos^{a-e}, and cos^2 = 1 - sin^2
    const Poly& s = w_plus.series();
    Eigen::VectorXd out = Eigen::VectorXd::Zero(1);
    bool parity_set = false;
    for (int e = s.low_exponent(); !s.empty() && e <= s.high_exponent(); ++e) {
        const double c = s.coeff(e);
        if (c == 0.0)
            continue;
        const int sin_exp = e + sin_power;
        const int cos_exp = cos_power - e;
        if (sin_exp < 0 || cos_exp < 0 || cos_exp % 2 != 0)
            throw DomainError("generator_prefactor: not a polynomial in sin^2 x");
        const bool term_odd = (sin_exp % 2 != 0);
        if (parity_set && term_odd != odd)
            throw DomainError("generator_prefactor: mixed parity");
        odd = term_odd;
        parity_set = true;
        const int s_pow = sin_exp / 2;
        const int c_pow = cos_exp / 2;
        if (out.size() < s_pow + c_pow + 1)
            out.conservativeResizeLike(Eigen::VectorXd::Zero(s_pow + c_pow + 1));
        for (int j = 0; j <= c_pow; ++j)
            out(s_pow + j) += c * sign_pow(j) * binomial_d(c_pow, j);
    }
    return out;
}

SecCscExpansion ExtendedOneParamSpec::potential_expansion() const
{
    SecCscExpansion v;
    v.sec = A;
    return v;
}

double ExtendedOneParamSpec::potential(double x) const
{
    return potential_expansion()(x);
}

TrigLaurentPoly ExtendedOneParamSpec::superpotential() const
{
    return TrigLaurentPoly::from_coefficients(DeformKind::TrigOne, lambda);
}

TrigLaurentPoly ExtendedOneParamSpec::superpotential_prime() const
{
    return TrigLaurentPoly::from_coefficients(DeformKind::TrigOne, lambda_prime);
}

ExtendedOneParamSpec build_one_param(int m, double A_top, double alpha)
{
    validate_one_param(m, A_top, alpha);
    ExtendedOneParamSpec spec;
    spec.m = m;
    spec.A_top = A_top;
    spec.alpha = alpha;
    spec.deform = DeformingFunction::trig_one(alpha);

    std::tie(spec.lambda, spec.lambda_prime) = lambda_one_param(m, A_top, alpha);
    spec.A = coefficients_one_param(m, A_top, alpha);
    spec.E0 = ground_energy_one_param(m, A_top, alpha);
    spec.gap = gap_one_param(m, A_top, alpha);
    spec.E1 = spec.E0 + spec.gap;
    spec.C = c_coefficients_one_param(m, spec.lambda, alpha);

    const ExpansionResult ex = expand_and_resum_one_param(m, A_top, alpha);
    spec.pair = generating_pair_one_param(m, A_top, alpha);

    std::vector<double> closed{spec.E0, spec.gap};
    std::vector<double> expanded{ex.E0, ex.gap};
    detail::append(closed, spec.A);
    detail::append(expanded, ex.A);
    const SuperpotentialSplit split = split_superpotentials(spec.pair);
    detail::append(closed, spec.lambda);
    detail::append(expanded, split.w.lam());
    detail::append(closed, spec.lambda_prime);
    detail::append(expanded, split.w_prime.lam());

    // psi1 prefactor: closed sum vs W+ cos^{2m+1} x / (2 sqrt(A_top))
    const Eigen::VectorXd pre = psi1_prefactor_one_param(m, alpha);
    bool odd = false;
    const Eigen::VectorXd pre_gen = generator_prefactor(spec.pair.w_plus, 2 * m + 1, 0, odd) / (2.0 * std::sqrt(A_top));
    detail::append(closed, pre);
    detail::append(expanded, pre_gen.head(pre.size()));

    spec.dual_path_discrepancy = detail::scaled_discrepancy(closed, expanded);
    if (!(spec.dual_path_discrepancy <= 1e-9) || !odd) {
        std::ostringstream msg;
        msg << "one-parameter build (m=" << m << ", A=" << A_top << ", alpha=" << alpha
            << "): closed forms and expansion disagree by " << spec.dual_path_discrepancy;
        throw ConsistencyError(msg.str(), spec.dual_path_discrepancy);
    }

    const double c1 = spec.C(0);
    ClosedFormWavefunction psi0;
    psi0.deform = spec.deform;
    psi0.f_exponent = -0.5 * (c1 + 1.0);
    psi0.cos_exponent = c1;
    for (int kappa = 1; kappa <= m; ++kappa)
        psi0.sec_terms.emplace_back(kappa, spec.C(kappa) / (2.0 * kappa));
    spec.psi0_form = psi0;

    ClosedFormWavefunction psi1 = psi0;
    psi1.f_exponent = -0.5 * (c1 + 2.0 * m + 2.0);
    psi1.prefactor = pre;
    psi1.odd_sin_factor = true;
    spec.psi1_form = psi1;
    return spec;
}

double psi0_closed_one_param(const ExtendedOneParamSpec& spec, double x)
{
    return spec.psi0_form(x);
}

double psi1_closed_one_param(const ExtendedOneParamSpec& spec, double x)
{
    return spec.psi1_form(x);
}

}  // namespace qestpt
