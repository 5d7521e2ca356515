#ifndef QESTPT_DEFORMING_HPP
#define QESTPT_DEFORMING_HPP

#include <numbers>

#include "qestpt/laurent.hpp"

namespace qestpt {

enum class DeformKind {
    TrigOne,  ///< f = 1 + alpha sin^2 x on (-pi/2, pi/2)
    TrigTwo,  ///< f = 1 + alpha cos 2x on (0, pi/2)
};

/// Value and first derivative of f at a point.
struct FValue {
    double f;
    double df;
};

/// Deforming function f(x) of the deformed momentum; the mass is m = 1/f^2.
///
/// alpha = 0 is admitted as the constant-mass limit and reported through
/// undeformed().
class DeformingFunction {
public:
    static DeformingFunction trig_one(double alpha);
    static DeformingFunction trig_two(double alpha);

    DeformKind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    bool undeformed() const { return alpha_ == 0.0; }

    double lower() const { return kind_ == DeformKind::TrigOne ? -std::numbers::pi / 2 : 0.0; }
    double upper() const { return std::numbers::pi / 2; }
    double width() const { return upper() - lower(); }
    double midpoint() const { return 0.5 * (lower() + upper()); }
    bool contains(double x) const { return x > lower() && x < upper(); }

    /// f and f' at an interior point; DomainError otherwise.
    FValue value(double x) const;

    /// Unchecked evaluation, valid for any real x.
    double f(double x) const;
    double df(double x) const;
    double d2f(double x) const;

    /// Mass m(x) = 1 / f(x)^2.
    double mass(double x) const;

    /// f (1 + t^2) = a0 + a2 t^2 with t = tan x.
    double tan_weight0() const;
    double tan_weight2() const;

private:
    DeformingFunction(DeformKind kind, double alpha) : kind_(kind), alpha_(alpha) {}

    DeformKind kind_;
    double alpha_;
};

/// f * dP/dx for a Laurent polynomial P in t = tan x, again such a polynomial.
template <typename Scalar>
LaurentPoly<Scalar> f_derivative(const LaurentPoly<Scalar>& p, const DeformingFunction& df)
{
    // d/dx t^n = n t^{n-1} (1 + t^2), and f (1 + t^2) = a0 + a2 t^2
    const Scalar a0(df.tan_weight0());
    const Scalar a2(df.tan_weight2());
    LaurentPoly<Scalar> out;
    for (int e = p.low_exponent(); !p.empty() && e <= p.high_exponent(); ++e) {
        const Scalar c = p.coeff(e);
        if (e == 0 || c == Scalar(0))
            continue;
        out.add_term(e - 1, Scalar(e) * c * a0);
        out.add_term(e + 1, Scalar(e) * c * a2);
    }
    if (out.empty())
        return LaurentPoly<Scalar>::constant(Scalar(0));
    return out;
}

/// Plain dP/dx as a Laurent polynomial in t.
template <typename Scalar>
LaurentPoly<Scalar> x_derivative(const LaurentPoly<Scalar>& p)
{
    LaurentPoly<Scalar> out = LaurentPoly<Scalar>::constant(Scalar(0));
    for (int e = p.low_exponent(); !p.empty() && e <= p.high_exponent(); ++e) {
        const Scalar c = p.coeff(e);
        if (e == 0 || c == Scalar(0))
            continue;
        out.add_term(e - 1, Scalar(e) * c);
        out.add_term(e + 1, Scalar(e) * c);
    }
    return out;
}

}  // namespace qestpt

#endif  // QESTPT_DEFORMING_HPP
