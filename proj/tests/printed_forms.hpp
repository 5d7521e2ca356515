#ifndef QESTPT_TESTS_PRINTED_FORMS_HPP
#define QESTPT_TESTS_PRINTED_FORMS_HPP

#include <cmath>

// Worked m = 1 results in their printed closed forms, used as reduction oracles.
namespace printed {

// printed m = 1 results of the one-parameter family
struct OneParamM1 {
    double A2, A4, E0, E1, f0, c0, sec0, f1;
    double s1, s3;  // prefactor sin x (s1 + s3 sin^2 x)
};

inline OneParamM1 printed_m1(double A6, double a)
{
    const double r = std::sqrt(A6);
    const double p = 1 + a;
    OneParamM1 o{};
    o.A2 = 15.0 / 4 * p * p + 3 * (1 + 4 * a) * r + 3 * (4 * a * a - 1) / (4 * p * p) * A6;
    o.A4 = -3 * r * (2 * p + a / p * r);
    const double base = 0.75 * p * (3 + 5 * a) + (1 - 2 * a) * (1 - 2 * a) / (4 * p * p) * A6;
    o.E0 = base + 3 * (-1 + 2 * a + 4 * a * a) / (2 * p) * r;
    o.E1 = base + 3 * (1 + 2 * a + 4 * a * a) / (2 * p) * r;
    o.f0 = 0.25 - r / (4 * p * p);
    o.c0 = r / (2 * p * p) - 1.5;
    o.sec0 = r / (2 * p);
    o.f1 = -1.25 - r / (4 * p * p);
    o.s1 = 3;
    o.s3 = -(1 - 2 * a);
    return o;
}

// printed m1 = m2 = 1 results of the two-parameter family
struct TwoParamM11 {
    double A2, A4, B2, B4, E0, E1, f0, c0, s0, sec0, csc0, f1;
    double q[4];  // prefactor coefficients of sin^{2k}
};

inline TwoParamM11 printed_m11(double A6, double B6, double a)
{
    const double ra = std::sqrt(A6), rb = std::sqrt(B6), m = 1 - a, p = 1 + a;
    TwoParamM11 o{};
    o.A2 = 15.0 / 4 * m * m - 24 * a * ra + 12 * a * (1 + 2 * a) / (m * m) * A6 - 6 * m / p * ra * rb;
    o.A4 = 3 * ra * (-2 * m + (1 + 3 * a) / m * ra);
    o.B2 = 15.0 / 4 * p * p + 24 * a * rb - 6 * p / m * ra * rb - 12 * a * (1 - 2 * a) / (p * p) * B6;
    o.B4 = 3 * rb * (-2 * p + (1 - 3 * a) / p * rb);
    const double tail = 4 * (1 + 2 * a) * (1 + 2 * a) / (m * m) * A6 + 8 * (1 - 2 * a) * (1 + 2 * a) / (m * p) * ra * rb
                        + 4 * (1 - 2 * a) * (1 - 2 * a) / (p * p) * B6;
    o.E0 = 3 * (2 * a * a + 3) + 12 * (a * a - 2 * a - 1) / m * ra + 12 * (a * a + 2 * a - 1) / p * rb + tail;
    o.E1 = 3 * (2 * a * a + 3) + 12 * (3 * a * a + 2 * a + 1) / m * ra + 12 * (3 * a * a - 2 * a + 1) / p * rb + tail;
    o.f0 = -p / (m * m) * ra - m / (p * p) * rb + 1;
    o.c0 = 2 * p / (m * m) * ra - 1.5;
    o.s0 = 2 * m / (p * p) * rb - 1.5;
    o.sec0 = ra / (2 * m);
    o.csc0 = rb / (2 * p);
    o.f1 = o.f0 - 3;
    o.q[0] = -2 * rb;
    o.q[1] = 12 * a / p * rb;
    o.q[2] = 6 * (p / m * ra + (1 - 3 * a) / p * rb);
    o.q[3] = -4 * ((1 + 2 * a) / m * ra + (1 - 2 * a) / p * rb);
    return o;
}

// printed m1 = 1, m2 = 0 results
struct TwoParamM10 {
    double A2, A4, E0, E1, f0, c0, s0, sec0, f1;
    double q[3];
};

inline TwoParamM10 printed_m10(double A6, double B2, double a)
{
    const double ra = std::sqrt(A6), m = 1 - a, p = 1 + a;
    const double D = std::sqrt(p * p + 4 * B2);
    TwoParamM10 o{};
    o.A2 = 15.0 / 4 * m * m - (24 * a + D) * ra + (-1 + 2 * a + 15 * a * a) / (m * m) * A6;
    o.A4 = ra * (-6 * m + (1 + 7 * a) / m * ra);
    const double tail = (1 + 3 * a) * (1 + 3 * a) / (m * m) * A6 + B2;
    o.E0 = 1.25 * m * (1 - 5 * a) - m * D + (-2 - 4 * a + 22 * a * a + (1 + 3 * a) * D) / m * ra + tail;
    o.E1 = 0.25 * m * (37 + 7 * a) + 3 * m * D + (6 * (1 + 2 * a + 5 * a * a) + (1 + 3 * a) * D) / m * ra + tail;
    o.f0 = -p / (2 * m * m) * ra - D / (4 * p);
    o.c0 = p / (m * m) * ra - 1.5;
    o.s0 = D / (2 * p) + 0.5;
    o.sec0 = ra / (2 * m);
    o.f1 = o.f0 - 2;
    const double k = 2 + 2 * a + D;
    o.q[0] = k;
    o.q[1] = -2 * (2 * p / m * ra + k);
    o.q[2] = 2 * (1 + 3 * a) / m * ra + k;
    return o;
}

}  // namespace printed

#endif
