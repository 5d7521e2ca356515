#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "qestpt/errors.hpp"
#include "qestpt/numeric_verify.hpp"
#include "qestpt/tpt_exact.hpp"
#include "qestpt/tpt_extended.hpp"
#include "support.hpp"

using namespace qestpt;

TEST_CASE("flattening map")
{
    for (double x : {-1.2, 0.0, 0.4})
        CHECK(mass_flatten(DeformingFunction::trig_one(0.0), x) == doctest::Approx(x));
    CHECK(mass_flatten(DeformingFunction::trig_two(0.0), 0.9) == doctest::Approx(0.9));
    const auto df = DeformingFunction::trig_one(-0.5);
    const double g = mass_flatten(df, std::numbers::pi / 4);
    CHECK(g == doctest::Approx(0.870420).epsilon(1e-6));
    const double q = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        [&](double x) { return 1.0 / df.f(x); }, 0.0, std::numbers::pi / 4, 10, 1e-14);
    CHECK(g == doctest::Approx(q).epsilon(1e-12));
}

TEST_CASE("flattening map has derivative 1/f")
{
    std::mt19937 gen(13);
    for (const auto& df : {DeformingFunction::trig_one(-0.7), DeformingFunction::trig_one(2.0),
                           DeformingFunction::trig_two(0.6), DeformingFunction::trig_two(-0.8)}) {
        for (double x : testing_support::random_points(df, 64, 0.95, 13)) {
            const double h = 1e-5;
            const double d = (mass_flatten(df, x + h) - mass_flatten(df, x - h)) / (2 * h);
            CHECK(std::abs(d - 1.0 / df.f(x)) < 1e-10 / df.f(x) + 1e-9);
        }
        const FlattenedDomain dom = flattened_domain(df);
        CHECK(dom.width() > 0.0);
        double prev = -1e300;
        for (int i = 1; i < 256; ++i) {
            const double x = df.lower() + df.width() * i / 256.0;
            const double g = mass_flatten(df, x);
            CHECK(g > prev);
            CHECK(g > dom.lower);
            CHECK(g < dom.upper);
            prev = g;
            CHECK(std::abs(mass_unflatten(df, g) - x) < 1e-12);
        }
    }
}

TEST_CASE("spectrum of the constant-mass baseline")
{
    const ExactOneParam p = ExactOneParam::make(2.0, 0.0);
    const NumericSpectrum s = solve_spectrum([&](double x) { return p.potential(x); }, p.deform(), 3, 4000);
    CHECK(std::abs(s.eigenvalues(0) / 4.0 - 1) < 1e-6);
    CHECK(std::abs(s.eigenvalues(1) / 9.0 - 1) < 1e-6);
    CHECK(std::abs(s.eigenvalues(2) / 16.0 - 1) < 1e-6);
    CHECK(s.N == 4000);
    CHECK(s.eigenvalues(0) < s.eigenvalues(1));
    CHECK(s.eigenvalues(1) < s.eigenvalues(2));
    CHECK(s.error_estimate.maxCoeff() < 1e-3);
}

TEST_CASE("spectra of the figure potentials")
{
    const ExtendedOneParamSpec a = build_one_param(1, 1.0, -0.5);
    const NumericSpectrum sa = solve_spectrum([&](double x) { return a.potential(x); }, a.deform, 2);
    CHECK(std::abs(sa.eigenvalues(0) / (19.0 / 16) - 1) < 1e-6);
    CHECK(std::abs(sa.eigenvalues(1) / (115.0 / 16) - 1) < 1e-6);
    const ExtendedTwoParamSpec b = build_two_param(1, 1, 1.0, 1.0, 0.5);
    const NumericSpectrum sb = solve_spectrum([&](double x) { return b.potential(x); }, b.user_deform(), 2);
    CHECK(std::abs(sb.eigenvalues(0) / 34.5 - 1) < 1e-6);
    CHECK(std::abs(sb.eigenvalues(1) / 146.5 - 1) < 1e-6);
}

TEST_CASE("solver refuses tiny grids and singular samples")
{
    const auto df = DeformingFunction::trig_one(0.0);
    CHECK_THROWS_AS(solve_spectrum([](double) { return 0.0; }, df, 1, 63), DomainError);
    CHECK_THROWS_AS(solve_spectrum([](double) { return NAN; }, df, 1, 100), NumericError);
}

TEST_CASE("Sturm property of eigenvectors")
{
    const ExactOneParam p = ExactOneParam::make(2.7, 0.3);
    const NumericSpectrum s = solve_spectrum([&](double x) { return p.potential(x); }, p.deform(), 5, 2000);
    for (int k = 0; k < 5; ++k)
        CHECK(count_nodes(s.eigenvectors.col(k)) == k);
}

TEST_CASE("second-order convergence")
{
    // halving the grid from N to N/2 must multiply the raw error by at least 3.5
    const ExactOneParam p = ExactOneParam::make(2.0, -0.5);
    const ExtendedOneParamSpec a = build_one_param(1, 1.0, -0.5);
    const ExtendedTwoParamSpec b = build_two_param(1, 1, 1.0, 1.0, 0.5);
    struct Case {
        RealFunction V;
        DeformingFunction df;
        double E;
    };
    const std::vector<Case> cases{
        {[&](double x) { return p.potential(x); }, p.deform(), energy_one_param(p, 0)},
        {[&](double x) { return a.potential(x); }, a.deform, a.E0},
        {[&](double x) { return b.potential(x); }, b.user_deform(), b.E0},
    };
    for (const Case& c : cases) {
        const NumericSpectrum s = solve_spectrum(c.V, c.df, 1, 4000);
        CHECK(std::abs(s.coarse(0) - c.E) >= 3.5 * std::abs(s.raw(0) - c.E));
    }
}

TEST_CASE("boundary-limited order with a small sin exponent")
{
    // u = sqrt(f) psi behaves like x^nu at x = 0 with nu = D1 + 1/2, which caps
    // the plain finite-difference order at about 2 nu - 2 instead of 2
    const ExtendedTwoParamSpec s = build_two_param(1, 0, 1.0, 1.0, 0.5);
    const double nu = s.psi0_form.sin_exponent + 0.5;
    REQUIRE(2 * nu - 2 < 2.0);
    auto V = [&](double x) { return s.potential(x); };
    const NumericSpectrum a = solve_spectrum(V, s.user_deform(), 1, 4000);
    const NumericSpectrum b = solve_spectrum(V, s.user_deform(), 1, 8000);
    const double order = std::log2(std::abs(a.raw(0) - s.E0) / std::abs(b.raw(0) - s.E0));
    CHECK(order == doctest::Approx(2 * nu - 2).epsilon(0.05));
    CHECK(std::abs(a.eigenvalues(0) / s.E0 - 1) < 1e-6);
}

TEST_CASE("operator residual")
{
    const ExactOneParam p = ExactOneParam::make(2.0, -0.5);
    const auto df = p.deform();
    const auto xs = interior_samples(df, 201);
    for (int n = 0; n <= 3; ++n)
        CHECK(residual([&](double x) { return wavefn_one_param(p, n, x); }, [&](double x) { return p.potential(x); },
                       df, energy_one_param(p, n), xs)
              < 1e-7);
    const ExtendedTwoParamSpec b = build_two_param(1, 1, 1.0, 1.0, 0.5);
    auto psi1 = [&](double x) { return b.psi1(x); };
    auto V = [&](double x) { return b.potential(x); };
    const auto ys = interior_samples(b.user_deform(), 201);
    CHECK(residual(psi1, V, b.user_deform(), 293.0 / 2, ys) < 1e-7);
    CHECK(residual(psi1, V, b.user_deform(), 293.0 / 2 + 1, ys) > 1e-3);
}

TEST_CASE("interior samples")
{
    const auto df = DeformingFunction::trig_two(0.2);
    const auto xs = interior_samples(df, 11, 0.9);
    CHECK(xs.front() == doctest::Approx(df.lower() + 0.05 * df.width()));
    CHECK(xs.back() == doctest::Approx(df.upper() - 0.05 * df.width()));
    CHECK_THROWS_AS(interior_samples(df, 1), DomainError);
}

TEST_CASE("node counting")
{
    Eigen::VectorXd v(6);
    v << 1.0, 0.5, 1e-20, -0.3, -0.1, 0.2;
    CHECK(count_nodes(v) == 2);
    CHECK(count_nodes(Eigen::VectorXd::Zero(0)) == 0);
    const ExtendedOneParamSpec a = build_one_param(1, 1.0, -0.5);
    CHECK(count_nodes(testing_support::on_grid([&](double x) { return psi0_closed_one_param(a, x); }, a.deform, 1001))
          == 0);
    CHECK(count_nodes(testing_support::on_grid([&](double x) { return psi1_closed_one_param(a, x); }, a.deform, 1001))
          == 1);
}

TEST_CASE("inner products")
{
    const ExtendedOneParamSpec a = build_one_param(1, 1.0, -0.5);
    auto p0 = [&](double x) { return psi0_closed_one_param(a, x); };
    auto p1 = [&](double x) { return psi1_closed_one_param(a, x); };
    CHECK(std::abs(inner_product(p0, p1, a.deform)) / std::sqrt(inner_product(p0, p0, a.deform) * inner_product(p1, p1, a.deform))
          < 1e-12);
    const ExtendedTwoParamSpec b = build_two_param(1, 1, 1.0, 1.0, 0.5);
    auto q0 = [&](double x) { return b.psi0(x); };
    auto q1 = [&](double x) { return b.psi1(x); };
    const auto d = b.user_deform();
    CHECK(std::abs(inner_product(q0, q1, d)) / std::sqrt(inner_product(q0, q0, d) * inner_product(q1, q1, d)) < 1e-8);
    auto one = [](double) { return 1.0; };
    CHECK(inner_product(one, one, d, 1001) == doctest::Approx(d.width()).epsilon(1e-3));
    CHECK_THROWS_AS(inner_product(one, one, d, 1000), DomainError);
    CHECK_THROWS_AS(inner_product(one, one, d, 999), DomainError);
}

TEST_CASE("oracle eigenvector matches the closed-form ground state")
{
    const ExtendedOneParamSpec a = build_one_param(1, 1.0, -0.5);
    const NumericSpectrum s = solve_spectrum([&](double x) { return a.potential(x); }, a.deform, 2, 4000);
    CHECK(eigenvector_distance(s, 0, [&](double x) { return psi0_closed_one_param(a, x); }, a.deform) < 1e-4);
    CHECK(eigenvector_distance(s, 1, [&](double x) { return psi1_closed_one_param(a, x); }, a.deform) < 1e-4);
    const Eigen::VectorXd psi = s.psi(0, a.deform);
    CHECK(psi.minCoeff() >= -1e-12 * psi.maxCoeff());
}
