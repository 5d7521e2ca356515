#ifndef QESTPT_LAURENT_HPP
#define QESTPT_LAURENT_HPP

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include <Eigen/Core>

namespace qestpt {

/// Finite Laurent polynomial sum_{e=low}^{high} c_e t^e with dense storage.
///
/// Every superpotential and potential in the library is such a polynomial in
/// t = tan x (cot x = 1/t), so products and the operator f d/dx stay closed.
template <typename Scalar>
class LaurentPoly {
public:
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    LaurentPoly() = default;

    LaurentPoly(int low_exponent, Vector coeffs)
        : low_(low_exponent), coeffs_(std::move(coeffs)) {}

    static LaurentPoly monomial(int exponent, Scalar c)
    {
        Vector v(1);
        v(0) = c;
        return LaurentPoly(exponent, v);
    }

    static LaurentPoly constant(Scalar c) { return monomial(0, c); }

    bool empty() const { return coeffs_.size() == 0; }
    int low_exponent() const { return low_; }
    int high_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    const Vector& coefficients() const { return coeffs_; }

    Scalar coeff(int e) const
    {
        if (empty() || e < low_ || e > high_exponent())
            return Scalar(0);
        return coeffs_(e - low_);
    }

    void add_term(int e, Scalar c)
    {
        if (empty()) {
            *this = monomial(e, c);
            return;
        }
        if (e < low_ || e > high_exponent()) {
            const int lo = std::min(low_, e);
            const int hi = std::max(high_exponent(), e);
            Vector grown = Vector::Zero(hi - lo + 1);
            grown.segment(low_ - lo, coeffs_.size()) = coeffs_;
            coeffs_ = std::move(grown);
            low_ = lo;
        }
        coeffs_(e - low_) += c;
    }

    Scalar max_abs_coeff() const { return empty() ? Scalar(0) : coeffs_.cwiseAbs().maxCoeff(); }

    /// Drop leading/trailing coefficients with |c| <= tol.
    LaurentPoly trimmed(Scalar tol = Scalar(0)) const
    {
        if (empty())
            return {};
        Eigen::Index first = 0;
        Eigen::Index last = coeffs_.size() - 1;
        while (first <= last && std::abs(coeffs_(first)) <= tol)
            ++first;
        while (last >= first && std::abs(coeffs_(last)) <= tol)
            --last;
        if (first > last)
            return {};
        return LaurentPoly(low_ + static_cast<int>(first), coeffs_.segment(first, last - first + 1));
    }

    template <typename T>
    T operator()(T t) const
    {
        if (empty())
            return T(0);
        // Horner over the nonnegative part, then the negative part in 1/t.
        T pos(0);
        for (int e = high_exponent(); e >= std::max(low_, 0); --e)
            pos = pos * t + T(coeff(e));
        if (low_ > 0)
            pos *= std::pow(t, low_);
        T neg(0);
        if (low_ < 0) {
            const T inv = T(1) / t;
            for (int e = low_; e <= -1; ++e)
                neg = neg * inv + T(coeff(e));
            neg *= inv;
        }
        return pos + neg;
    }

    template <typename T>
    LaurentPoly<T> cast() const
    {
        return LaurentPoly<T>(low_, coeffs_.template cast<T>());
    }

    LaurentPoly& operator+=(const LaurentPoly& o)
    {
        for (int e = o.low_; !o.empty() && e <= o.high_exponent(); ++e)
            add_term(e, o.coeff(e));
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o)
    {
        for (int e = o.low_; !o.empty() && e <= o.high_exponent(); ++e)
            add_term(e, -o.coeff(e));
        return *this;
    }

    LaurentPoly& operator*=(Scalar s)
    {
        coeffs_ *= s;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, Scalar s) { return a *= s; }
    friend LaurentPoly operator*(Scalar s, LaurentPoly a) { return a *= s; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        if (a.empty() || b.empty())
            return {};
        Vector out = Vector::Zero(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (Eigen::Index i = 0; i < a.coeffs_.size(); ++i)
            out.segment(i, b.coeffs_.size()) += a.coeffs_(i) * b.coeffs_;
        return LaurentPoly(a.low_ + b.low_, out);
    }

    /// Multiply by t^shift.
    LaurentPoly shifted(int shift) const { return LaurentPoly(low_ + shift, coeffs_); }

private:
    int low_ = 0;
    Vector coeffs_;
};

/// Quotient and remainder of ordinary polynomial division (exponents >= 0).
template <typename Scalar>
struct PolyDivision {
    LaurentPoly<Scalar> quotient;
    LaurentPoly<Scalar> remainder;
};

/// Long division of nonnegative-exponent polynomials, highest degree first.
template <typename Scalar>
PolyDivision<Scalar> divide(const LaurentPoly<Scalar>& num, const LaurentPoly<Scalar>& den)
{
    using Poly = LaurentPoly<Scalar>;
    using Vector = typename Poly::Vector;
    const int dn = den.high_exponent();
    const Scalar lead = den.coeff(dn);
    const int nn = num.high_exponent();
    Vector rem = Vector::Zero(std::max(nn, 0) + 1);
    for (int e = std::max(num.low_exponent(), 0); e <= nn; ++e)
        rem(e) = num.coeff(e);
    if (nn < dn)
        return {Poly::constant(Scalar(0)), Poly(0, rem)};
    Vector quot = Vector::Zero(nn - dn + 1);
    for (int e = nn; e >= dn; --e) {
        const Scalar q = rem(e) / lead;
        quot(e - dn) = q;
        for (int j = std::max(den.low_exponent(), 0); j <= dn; ++j)
            rem(e - dn + j) -= q * den.coeff(j);
        rem(e) = Scalar(0);
    }
    return {Poly(0, quot), Poly(0, Vector(rem.head(dn)))};
}

}  // namespace qestpt

#endif  // QESTPT_LAURENT_HPP
