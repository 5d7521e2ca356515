#include <cmath>
#include <numbers>
#include <sstream>

#include "extended_detail.hpp"
#include "qestpt/combinatorics.hpp"
#include "qestpt/errors.hpp"
#include "qestpt/tpt_extended.hpp"

namespace qestpt {

using detail::sign_pow;
using detail::Terms;

namespace {

struct Canonicalized {
    TwoParamFamily family;
    bool reflected = false;
};

Canonicalized canonicalize(int m1, int m2, double A_top, double B_top, double alpha)
{
    if (m1 < 0 || m2 < 0)
        throw DomainError("two-parameter extension requires m1, m2 >= 0");
    if (m1 == 0 && m2 == 0)
        throw DomainError("m1 = m2 = 0 is the exactly solvable baseline; use ExactTwoParam");
    if (!(A_top > 0.0) || !(B_top > 0.0) || !std::isfinite(A_top) || !std::isfinite(B_top))
        throw DomainError("two-parameter extension requires positive top coefficients");
    DeformingFunction::trig_two(alpha);
    if (m1 >= m2)
        return {{m1, m2, A_top, B_top, alpha}, false};
    // x -> pi/2 - x swaps sec and csc and maps alpha to -alpha
    return {{m2, m1, B_top, A_top, -alpha}, true};
}

double effective_sqrt_b(const TwoParamFamily& c, double* delta = nullptr)
{
    if (c.m2 > 0)
        return std::sqrt(c.B_top);
    const double d = std::sqrt((1.0 + c.alpha) * (1.0 + c.alpha) + 4.0 * c.B_top);
    if (delta)
        *delta = d;
    return 1.0 + c.alpha + 0.5 * d;
}

// sum over l of C(M, m2+l+1) C(M, m2+k-l), the A-side convolution
double conv_a(int m1, int m2, int k, int lo, int hi)
{
    const int M = m1 + m2 + 1;
    Terms t;
    for (int l = lo; l <= hi; ++l)
        t.push_back(binomial_d(M, m2 + l + 1) * binomial_d(M, m2 + k - l));
    return accurate_sum(t);
}

double conv_b(int m1, int m2, int l, int lo, int hi)
{
    const int M = m1 + m2 + 1;
    Terms t;
    for (int k = lo; k <= hi; ++k)
        t.push_back(binomial_d(M, m1 + k + 1) * binomial_d(M, m1 + l - k));
    return accurate_sum(t);
}

// [(2 m2 - 2k) C(M, m2+k+1) - (2 m1 + 2k) C(M, m2+k)]
double bracket_a(int m1, int m2, int k)
{
    const int M = m1 + m2 + 1;
    return (2.0 * m2 - 2.0 * k) * binomial_d(M, m2 + k + 1) - (2.0 * m1 + 2.0 * k) * binomial_d(M, m2 + k);
}

double bracket_b(int m1, int m2, int l)
{
    const int M = m1 + m2 + 1;
    return (2.0 * m1 - 2.0 * l) * binomial_d(M, m1 + l + 1) - (2.0 * m2 + 2.0 * l) * binomial_d(M, m1 + l);
}

}  // namespace

GeneratingPair generating_pair_two_param(const TwoParamFamily& c)
{
    if (c.m1 < c.m2)
        throw DomainError("generating_pair_two_param expects the canonical orientation m1 >= m2");
    const DeformingFunction df = DeformingFunction::trig_two(c.alpha);
    const int M = c.m1 + c.m2 + 1;
    const double sa = std::sqrt(c.A_top);
    const double sb = effective_sqrt_b(c);
    const double r = (1.0 + c.alpha) / (1.0 - c.alpha);
    Poly wp = Poly::constant(0.0);
    for (int k = 0; k <= c.m1; ++k)
        wp.add_term(2 * k + 1, 2.0 * sa * binomial_d(M, c.m2 + k + 1) * std::pow(r, c.m1 - k));
    for (int l = 0; l <= c.m2; ++l)
        wp.add_term(-(2 * l + 1), -2.0 * sb * binomial_d(M, c.m1 + l + 1) * std::pow(1.0 / r, c.m2 - l));
    Poly wm = Poly::monomial(1, (2 * c.m1 + 1) * (1.0 - c.alpha));
    wm.add_term(-1, -(2 * c.m2 + 1) * (1.0 + c.alpha));
    return make_generating_pair(TrigLaurentPoly(DeformKind::TrigTwo, wp), TrigLaurentPoly(DeformKind::TrigTwo, wm),
                                df);
}

TwoParamClosedForms closed_forms_two_param(int m1, int m2, double sa, double sb, double alpha)
{
    const int M = m1 + m2 + 1;
    const double ap = 1.0 + alpha;
    const double am = 1.0 - alpha;
    const double r = ap / am;
    const double A_top = sa * sa;
    const double B_top = sb * sb;
    TwoParamClosedForms out;

    // M! / (m1! m2!) = C(M, m1) (m2 + 1)
    out.gap = 4.0 * binomial_d(M, m1) * (m2 + 1)
              * (sa * std::pow(ap, m1 + 1) / std::pow(am, m1) + sb * std::pow(am, m2 + 1) / std::pow(ap, m2));

    // E0
    {
        Terms sa_terms{2.0 * m2 * binomial_d(M, m2 + 1) * std::pow(ap, m1 + 1) / std::pow(am, m1)};
        for (int k = 1; k <= m1 + 1; ++k)
            sa_terms.push_back(sign_pow(k) * bracket_a(m1, m2, k) * std::pow(ap, m1 - k + 1) / std::pow(am, m1 - k));
        Terms sb_terms{2.0 * m1 * binomial_d(M, m1 + 1) * std::pow(am, m2 + 1) / std::pow(ap, m2)};
        for (int l = 1; l <= m2 + 1; ++l)
            sb_terms.push_back(sign_pow(l) * bracket_b(m1, m2, l) * std::pow(am, m2 - l + 1) / std::pow(ap, m2 - l));
        Terms aa_terms;
        for (int k = 1; k <= 2 * m1 + 1; ++k)
            aa_terms.push_back(sign_pow(k) * std::pow(r, 2 * m1 - k + 1)
                               * conv_a(m1, m2, k, std::max(0, k - m1 - 1), std::min(k - 1, m1)));
        Terms ab_terms;
        for (int k = 0; k <= m1; ++k)
            ab_terms.push_back(sign_pow(k) * std::pow(r, m1 - m2 - k) * conv_a(m1, m2, k, k, std::min(m2 + k, m1)));
        for (int l = 1; l <= m2; ++l)
            ab_terms.push_back(sign_pow(l) * std::pow(r, m1 - m2 + l) * conv_b(m1, m2, l, l, m2));
        Terms bb_terms;
        for (int l = 1; l <= 2 * m2 + 1; ++l)
            bb_terms.push_back(sign_pow(l) * std::pow(1.0 / r, 2 * m2 - l + 1)
                               * conv_b(m1, m2, l, std::max(0, l - m2 - 1), std::min(l - 1, m2)));
        const double a2 = alpha * alpha;
        out.E0 = accurate_sum({static_cast<double>(M) * M, -2.0 * alpha * (m1 - m2) * (m1 + m2 + 2),
                               a2 * ((m1 - m2) * (m1 - m2) + 2.0 * M), -sa * accurate_sum(sa_terms),
                               -sb * accurate_sum(sb_terms), -A_top * accurate_sum(aa_terms),
                               2.0 * sa * sb * accurate_sum(ab_terms), -B_top * accurate_sum(bb_terms)});
    }

    // A_{2k}
    out.A = Eigen::VectorXd::Zero(2 * m1 + 1);
    {
        Terms lin, quad, cross;
        for (int k = 1; k <= m1 + 1; ++k)
            lin.push_back(sign_pow(k) * k * std::pow(ap, m1 - k + 1) / std::pow(am, m1 - k) * bracket_a(m1, m2, k));
        for (int k = 1; k <= 2 * m1 + 1; ++k)
            quad.push_back(sign_pow(k) * k * std::pow(r, 2 * m1 - k + 1)
                           * conv_a(m1, m2, k, std::max(0, k - m1 - 1), std::min(k - 1, m1)));
        for (int k = 1; k <= m1; ++k)
            cross.push_back(sign_pow(k) * k * std::pow(r, m1 - m2 - k) * conv_a(m1, m2, k, k, std::min(m2 + k, m1)));
        out.A(0) = accurate_sum({(m1 + 0.5) * (m1 + 1.5) * am * am, -sa * accurate_sum(lin),
                                 -A_top * accurate_sum(quad), 2.0 * sa * sb * accurate_sum(cross)});
    }
    for (int k = 2; k <= m1 + 1; ++k) {
        Terms lin, quad, cross;
        for (int l = k; l <= m1 + 1; ++l)
            lin.push_back(sign_pow(l - k) * binomial_d(l, k) * std::pow(ap, m1 - l + 1) / std::pow(am, m1 - l)
                          * bracket_a(m1, m2, l));
        for (int l = k; l <= 2 * m1 + 1; ++l)
            quad.push_back(sign_pow(l - k) * binomial_d(l, k) * std::pow(r, 2 * m1 - l + 1)
                           * conv_a(m1, m2, l, std::max(0, l - m1 - 1), std::min(l - 1, m1)));
        for (int l = k; l <= m1; ++l)
            cross.push_back(sign_pow(l - k) * binomial_d(l, k) * std::pow(r, m1 - m2 - l)
                            * conv_a(m1, m2, l, l, std::min(m2 + l, m1)));
        out.A(k - 1) = accurate_sum({sa * accurate_sum(lin), A_top * accurate_sum(quad),
                                     -2.0 * sa * sb * accurate_sum(cross)});
    }
    for (int k = m1 + 2; k <= 2 * m1; ++k) {
        Terms quad;
        for (int l = k; l <= 2 * m1 + 1; ++l)
            quad.push_back(sign_pow(l - k) * binomial_d(l, k) * std::pow(r, 2 * m1 - l + 1)
                           * conv_a(m1, m2, l, l - m1 - 1, m1));
        out.A(k - 1) = A_top * accurate_sum(quad);
    }
    out.A(2 * m1) = A_top;

    // B_{2l}
    out.B = Eigen::VectorXd::Zero(2 * m2 + 1);
    {
        Terms lin, cross, quad;
        for (int k = 1; k <= m2 + 1; ++k)
            lin.push_back(sign_pow(k) * k * std::pow(am, m2 - k + 1) / std::pow(ap, m2 - k) * bracket_b(m1, m2, k));
        for (int k = 1; k <= m2; ++k)
            cross.push_back(sign_pow(k) * k * std::pow(r, m1 - m2 + k) * conv_b(m1, m2, k, k, m2));
        for (int k = 1; k <= 2 * m2 + 1; ++k)
            quad.push_back(sign_pow(k) * k * std::pow(1.0 / r, 2 * m2 - k + 1)
                           * conv_b(m1, m2, k, std::max(0, k - m2 - 1), std::min(k - 1, m2)));
        out.B(0) = accurate_sum({(m2 + 0.5) * (m2 + 1.5) * ap * ap, -sb * accurate_sum(lin),
                                 2.0 * sa * sb * accurate_sum(cross), -B_top * accurate_sum(quad)});
    }
    for (int l = 2; l <= m2 + 1; ++l) {
        Terms lin, cross, quad;
        for (int k = l; k <= m2 + 1; ++k)
            lin.push_back(sign_pow(k - l) * binomial_d(k, l) * std::pow(am, m2 - k + 1) / std::pow(ap, m2 - k)
                          * bracket_b(m1, m2, k));
        for (int k = l; k <= m2; ++k)
            cross.push_back(sign_pow(k - l) * binomial_d(k, l) * std::pow(r, m1 - m2 + k) * conv_b(m1, m2, k, k, m2));
        for (int k = l; k <= 2 * m2 + 1; ++k)
            quad.push_back(sign_pow(k - l) * binomial_d(k, l) * std::pow(1.0 / r, 2 * m2 - k + 1)
                           * conv_b(m1, m2, k, std::max(0, k - m2 - 1), std::min(k - 1, m2)));
        out.B(l - 1) = accurate_sum({sb * accurate_sum(lin), -2.0 * sa * sb * accurate_sum(cross),
                                     B_top * accurate_sum(quad)});
    }
    for (int l = m2 + 2; l <= 2 * m2; ++l) {
        Terms quad;
        for (int k = l; k <= 2 * m2 + 1; ++k)
            quad.push_back(sign_pow(k - l) * binomial_d(k, l) * std::pow(1.0 / r, 2 * m2 - k + 1)
                           * conv_b(m1, m2, k, k - m2 - 1, m2));
        out.B(l - 1) = B_top * accurate_sum(quad);
    }
    // with m2 = 0 the sqrt_b substitution makes B_2 a derived value
    if (m2 > 0)
        out.B(2 * m2) = B_top;
    return out;
}

Eigen::VectorXd psi1_prefactor_two_param(int m1, int m2, double sa, double sb, double alpha)
{
    const int M = m1 + m2 + 1;
    const double ap = 1.0 + alpha;
    const double am = 1.0 - alpha;
    Eigen::VectorXd P(M + 1);
    for (int k = 0; k <= m2; ++k)
        P(k) = -2.0 * sb * sign_pow(k) * binomial_d(M, k) * std::pow(2.0 * alpha / ap, k);
    for (int k = m2 + 1; k <= M; ++k)
        P(k) = binomial_d(M, k)
               * (2.0 * sa * std::pow(ap / am, M - k) * f_poly(k - m2 - 1, k, ap / am)
                  - 2.0 * sb * sign_pow(k) * f_poly(m2, k, am / ap));
    return P;
}

ExpansionResult expand_and_resum_two_param(int m1, int m2, double A_top, double B_top, double alpha)
{
    const Canonicalized cz = canonicalize(m1, m2, A_top, B_top, alpha);
    const TwoParamFamily& c = cz.family;
    const GeneratingPair pair = generating_pair_two_param(c);
    const DeformingFunction df = DeformingFunction::trig_two(c.alpha);
    const SuperpotentialSplit split = split_superpotentials(pair);
    const SecCscExpansion v = resum_sec_csc(partner_potential(split.w, df, PartnerSide::V1));
    ExpansionResult out;
    out.E0 = -v.constant;
    out.gap = pair.gap;
    out.A = Eigen::VectorXd::Zero(2 * c.m1 + 1);
    out.B = Eigen::VectorXd::Zero(2 * c.m2 + 1);
    const auto na = std::min<Eigen::Index>(v.sec.size(), out.A.size());
    const auto nb = std::min<Eigen::Index>(v.csc.size(), out.B.size());
    out.A.head(na) = v.sec.head(na);
    out.B.head(nb) = v.csc.head(nb);
    if (cz.reflected)
        std::swap(out.A, out.B);
    return out;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> cd_coefficients(const ExtendedTwoParamSpec& spec)
{
    return {spec.C, spec.D};
}

namespace {

std::pair<Eigen::VectorXd, Eigen::VectorXd> compute_cd(int m1, int m2, const Eigen::VectorXd& lam,
                                                       const Eigen::VectorXd& mu, double alpha)
{
    Eigen::VectorXd C(m1 + 1);
    for (int p = 1; p <= m1 + 1; ++p) {
        Terms outer;
        for (int q = p - 1; q <= m1; ++q) {
            Terms inner;
            for (int k = q; k <= m1; ++k)
                inner.push_back(sign_pow(k - q) * binomial_d(k, q) * lam(k));
            outer.push_back(std::pow(2.0, q) * std::pow(-alpha, q - p + 1) / std::pow(1.0 - alpha, q - p + 2)
                            * accurate_sum(inner));
        }
        C(p - 1) = accurate_sum(outer);
    }
    Eigen::VectorXd D(m2 + 1);
    for (int q = 1; q <= m2 + 1; ++q) {
        Terms outer;
        for (int p = q - 1; p <= m2; ++p) {
            Terms inner;
            for (int l = p; l <= m2; ++l)
                inner.push_back(sign_pow(l - p) * binomial_d(l, p) * mu(l));
            outer.push_back(std::pow(2.0, p) * std::pow(alpha, p - q + 1) / std::pow(1.0 + alpha, p - q + 2)
                            * accurate_sum(inner));
        }
        D(q - 1) = accurate_sum(outer);
    }
    return {C, D};
}

}  // namespace

SecCscExpansion ExtendedTwoParamSpec::potential_expansion() const
{
    SecCscExpansion v;
    v.sec = sec_coefficients();
    v.csc = csc_coefficients();
    return v;
}

double ExtendedTwoParamSpec::potential(double x) const
{
    return potential_expansion()(x);
}

double ExtendedTwoParamSpec::psi0(double x) const
{
    return psi0_closed_two_param(*this, x);
}

double ExtendedTwoParamSpec::psi1(double x) const
{
    return psi1_closed_two_param(*this, x);
}

ExtendedTwoParamSpec build_two_param(int m1, int m2, double A_top, double B_top, double alpha)
{
    const Canonicalized cz = canonicalize(m1, m2, A_top, B_top, alpha);
    const TwoParamFamily& c = cz.family;

    ExtendedTwoParamSpec spec;
    spec.requested = {m1, m2, A_top, B_top, alpha};
    spec.canonical = c;
    spec.reflected = cz.reflected;
    spec.sqrt_b = effective_sqrt_b(c, &spec.delta_b);
    spec.deform = DeformingFunction::trig_two(c.alpha);

    const int M = c.m1 + c.m2 + 1;
    const double sa = std::sqrt(c.A_top);
    const double sb = spec.sqrt_b;
    const double ap = 1.0 + c.alpha;
    const double am = 1.0 - c.alpha;
    const double r = ap / am;

    spec.lambda.resize(c.m1 + 1);
    for (int k = 0; k <= c.m1; ++k)
        spec.lambda(k) = sa * binomial_d(M, c.m2 + k + 1) * std::pow(r, c.m1 - k);
    spec.lambda(0) -= (c.m1 + 0.5) * am;
    spec.lambda_prime = spec.lambda;
    spec.lambda_prime(0) += (2 * c.m1 + 1) * am;
    spec.mu.resize(c.m2 + 1);
    for (int l = 0; l <= c.m2; ++l)
        spec.mu(l) = sb * binomial_d(M, c.m1 + l + 1) * std::pow(1.0 / r, c.m2 - l);
    spec.mu(0) -= (c.m2 + 0.5) * ap;
    spec.mu_prime = spec.mu;
    spec.mu_prime(0) += (2 * c.m2 + 1) * ap;

    const TwoParamClosedForms closed = closed_forms_two_param(c.m1, c.m2, sa, sb, c.alpha);
    spec.E0 = closed.E0;
    spec.gap = closed.gap;
    spec.E1 = spec.E0 + spec.gap;
    spec.A = closed.A;
    spec.B = closed.B;
    std::tie(spec.C, spec.D) = compute_cd(c.m1, c.m2, spec.lambda, spec.mu, c.alpha);

    spec.pair = generating_pair_two_param(c);
    const ExpansionResult ex = expand_and_resum_two_param(c.m1, c.m2, c.A_top, c.B_top, c.alpha);
    const SuperpotentialSplit split = split_superpotentials(spec.pair);

    std::vector<double> lhs{spec.E0, spec.gap};
    std::vector<double> rhs{ex.E0, ex.gap};
    detail::append(lhs, spec.A);
    detail::append(rhs, ex.A);
    detail::append(lhs, spec.B);
    detail::append(rhs, ex.B);
    if (c.m2 == 0) {
        // B_2 recovered from the substituted generator must be the input
        lhs.push_back(c.B_top);
        rhs.push_back(ex.B(0));
    }
    detail::append(lhs, spec.lambda);
    detail::append(rhs, split.w.lam());
    detail::append(lhs, spec.mu);
    detail::append(rhs, split.w.mu());
    detail::append(lhs, spec.lambda_prime);
    detail::append(rhs, split.w_prime.lam());
    detail::append(lhs, spec.mu_prime);
    detail::append(rhs, split.w_prime.mu());

    const Eigen::VectorXd pre = psi1_prefactor_two_param(c.m1, c.m2, sa, sb, c.alpha);
    bool odd = true;
    const Eigen::VectorXd pre_gen = generator_prefactor(spec.pair.w_plus, 2 * c.m1 + 1, 2 * c.m2 + 1, odd);
    detail::append(lhs, pre);
    detail::append(rhs, pre_gen.head(pre.size()));

    spec.dual_path_discrepancy = detail::scaled_discrepancy(lhs, rhs);
    if (!(spec.dual_path_discrepancy <= 1e-8) || odd) {
        std::ostringstream msg;
        msg << "two-parameter build (m1=" << m1 << ", m2=" << m2 << ", alpha=" << alpha
            << "): closed forms and expansion disagree by " << spec.dual_path_discrepancy;
        throw ConsistencyError(msg.str(), spec.dual_path_discrepancy);
    }

    const double c1 = spec.C(0);
    const double d1 = spec.D(0);
    ClosedFormWavefunction psi0;
    psi0.deform = spec.deform;
    psi0.f_exponent = -0.5 * (c1 + d1 + 1.0);
    psi0.cos_exponent = c1;
    psi0.sin_exponent = d1;
    for (int p = 2; p <= c.m1 + 1; ++p)
        psi0.sec_terms.emplace_back(p - 1, spec.C(p - 1) / (std::pow(2.0, p) * (p - 1)));
    for (int q = 2; q <= c.m2 + 1; ++q)
        psi0.csc_terms.emplace_back(q - 1, spec.D(q - 1) / (std::pow(2.0, q) * (q - 1)));
    spec.psi0_form = psi0;

    ClosedFormWavefunction psi1 = psi0;
    psi1.f_exponent = -0.5 * (c1 + d1 + 2.0 * c.m1 + 2.0 * c.m2 + 3.0);
    psi1.prefactor = pre;
    spec.psi1_form = psi1;
    return spec;
}

double psi0_closed_two_param(const ExtendedTwoParamSpec& spec, double x)
{
    spec.user_deform().value(x);
    return spec.psi0_form(spec.reflected ? std::numbers::pi / 2 - x : x);
}

double psi1_closed_two_param(const ExtendedTwoParamSpec& spec, double x)
{
    spec.user_deform().value(x);
    return spec.psi1_form(spec.reflected ? std::numbers::pi / 2 - x : x);
}

}  // namespace qestpt
