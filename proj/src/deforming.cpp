#include "qestpt/deforming.hpp"

#include <cmath>
#include <sstream>

#include "qestpt/errors.hpp"

namespace qestpt {

DeformingFunction DeformingFunction::trig_one(double alpha)
{
    if (!std::isfinite(alpha) || !(alpha > -1.0))
        throw DomainError("trig_one deforming function requires alpha > -1");
    return DeformingFunction(DeformKind::TrigOne, alpha);
}

DeformingFunction DeformingFunction::trig_two(double alpha)
{
    if (!std::isfinite(alpha) || !(std::abs(alpha) < 1.0))
        throw DomainError("trig_two deforming function requires |alpha| < 1");
    return DeformingFunction(DeformKind::TrigTwo, alpha);
}

FValue DeformingFunction::value(double x) const
{
    if (!contains(x)) {
        std::ostringstream msg;
        msg << "x = " << x << " outside open interval (" << lower() << ", " << upper() << ")";
        throw DomainError(msg.str());
    }
    return {f(x), df(x)};
}

double DeformingFunction::f(double x) const
{
    if (kind_ == DeformKind::TrigOne) {
        const double s = std::sin(x);
        return 1.0 + alpha_ * s * s;
    }
    return 1.0 + alpha_ * std::cos(2.0 * x);
}

double DeformingFunction::df(double x) const
{
    if (kind_ == DeformKind::TrigOne)
        return alpha_ * std::sin(2.0 * x);
    return -2.0 * alpha_ * std::sin(2.0 * x);
}

double DeformingFunction::d2f(double x) const
{
    if (kind_ == DeformKind::TrigOne)
        return 2.0 * alpha_ * std::cos(2.0 * x);
    return -4.0 * alpha_ * std::cos(2.0 * x);
}

double DeformingFunction::mass(double x) const
{
    const double v = f(x);
    return 1.0 / (v * v);
}

double DeformingFunction::tan_weight0() const
{
    return kind_ == DeformKind::TrigOne ? 1.0 : 1.0 + alpha_;
}

double DeformingFunction::tan_weight2() const
{
    return kind_ == DeformKind::TrigOne ? 1.0 + alpha_ : 1.0 - alpha_;
}

}  // namespace qestpt
