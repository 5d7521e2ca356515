// One line per acceptance criterion; exit status is non-zero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "printed_forms.hpp"
#include "qestpt/dsusy.hpp"
#include "qestpt/numeric_verify.hpp"
#include "qestpt/tpt_exact.hpp"
#include "qestpt/tpt_extended.hpp"

using namespace qestpt;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double rel(double a, double b)
{
    return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass)
            detail = what;
        pass = pass && ok;
    }
};

struct Level {
    std::string name;
    RealFunction V;
    DeformingFunction df;
    std::vector<double> energies;
    std::vector<RealFunction> psi;
};

std::vector<Level> figure_levels()
{
    std::vector<Level> out;
    for (const auto& c : {cli::one_param_case(1, 1.0, -0.5), cli::two_param_case(1, 1, 1.0, 1.0, 0.5),
                          cli::two_param_case(1, 0, 1.0, 1.0, 0.5)})
        out.push_back({c.family + ":" + c.params, c.V, c.deform, {c.E0, c.E1}, {c.psi0, c.psi1}});
    return out;
}

std::vector<Level> baseline_levels()
{
    std::vector<Level> out;
    for (double alpha : {-0.5, 0.0}) {
        const ExactOneParam p = ExactOneParam::make(2.0, alpha);
        Level l{"exact one A=2 alpha=" + std::to_string(alpha), [p](double x) { return p.potential(x); }, p.deform(),
                {}, {}};
        for (int n = 0; n <= 4; ++n) {
            l.energies.push_back(energy_one_param(p, n));
            l.psi.push_back([p, n](double x) { return wavefn_one_param(p, n, x); });
        }
        out.push_back(l);
    }
    for (double alpha : {0.0, 0.5}) {
        const ExactTwoParam p = ExactTwoParam::make(2.0, 2.0, alpha);
        Level l{"exact two A=B=2 alpha=" + std::to_string(alpha), [p](double x) { return p.potential(x); },
                p.deform(), {}, {}};
        for (int n = 0; n <= 4; ++n) {
            l.energies.push_back(energy_two_param(p, n));
            l.psi.push_back([p, n](double x) { return wavefn_two_param(p, n, x); });
        }
        out.push_back(l);
    }
    return out;
}

Outcome criterion_1()
{
    Outcome o;
    const ExtendedOneParamSpec a = build_one_param(1, 1.0, -0.5);
    const ExtendedTwoParamSpec b = build_two_param(1, 1, 1.0, 1.0, 0.5);
    const ExtendedTwoParamSpec c = build_two_param(1, 0, 1.0, 1.0, 0.5);
    o.require(std::abs(a.E0 - 19.0 / 16) <= 1e-12 && std::abs(a.E1 - 115.0 / 16) <= 1e-12, "figure 1 energies");
    o.require(std::abs(b.E0 - 69.0 / 2) <= 1e-12 && std::abs(b.E1 - 293.0 / 2) <= 1e-12, "figure 3 energies");
    o.require(std::abs(c.E0 - 629.0 / 16) <= 1e-12 && std::abs(c.E1 - 1381.0 / 16) <= 1e-12, "figure 5 energies");
    if (o.pass)
        o.detail = "three figure pairs within 1e-12";
    return o;
}

Outcome criterion_2()
{
    Outcome o;
    const auto t0 = Clock::now();
    double worst = 0.0;
    auto levels = figure_levels();
    for (const Level& l : baseline_levels())
        levels.push_back(l);
    for (const Level& l : levels) {
        const int n = static_cast<int>(l.energies.size());
        const NumericSpectrum s = solve_spectrum(l.V, l.df, n, 4000);
        for (int k = 0; k < n; ++k) {
            const double e = std::abs(s.eigenvalues(k) - l.energies[k]) / std::abs(l.energies[k]);
            worst = std::max(worst, e);
            o.require(e < 1e-6, l.name + " level " + std::to_string(k));
        }
    }
    const double t = seconds_since(t0);
    o.require(t < 10.0, "runtime");
    std::ostringstream d;
    d << "max rel err " << worst << ", " << t << " s";
    if (o.pass)
        o.detail = d.str();
    return o;
}

struct SweepItem {
    GeneratingPair pair;
    DeformingFunction df;
    double closed_gap;
};

Outcome criterion_3(std::vector<SweepItem>& sweep)
{
    Outcome o;
    const auto t0 = Clock::now();
    std::mt19937 gen(20240601);
    std::uniform_real_distribution<double> ut(0.25, 4.0), ua(-0.8, 0.8);
    double worst = 0.0;
    for (int m = 1; m <= 4; ++m)
        for (int i = 0; i < 20; ++i) {
            const double At = ut(gen), a = ua(gen);
            try {
                const ExtendedOneParamSpec s = build_one_param(m, At, a);
                worst = std::max(worst, s.dual_path_discrepancy);
                o.require(s.dual_path_discrepancy <= 1e-8, "one-parameter m=" + std::to_string(m));
                sweep.push_back({s.pair, s.deform, gap_one_param(m, At, a)});
            } catch (const std::exception& e) {
                o.require(false, e.what());
            }
        }
    for (auto [m1, m2] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}, {1, 0}, {2, 0}})
        for (int i = 0; i < 20; ++i) {
            const double At = ut(gen), Bt = ut(gen), a = ua(gen);
            try {
                const ExtendedTwoParamSpec s = build_two_param(m1, m2, At, Bt, a);
                worst = std::max(worst, s.dual_path_discrepancy);
                o.require(s.dual_path_discrepancy <= 1e-8, "two-parameter");
                const TwoParamClosedForms cf = closed_forms_two_param(m1, m2, std::sqrt(At), s.sqrt_b, a);
                sweep.push_back({s.pair, s.deform, cf.gap});
            } catch (const std::exception& e) {
                o.require(false, e.what());
            }
        }
    const double t = seconds_since(t0);
    o.require(t < 5.0, "runtime");
    std::ostringstream d;
    d << "max discrepancy " << worst << ", " << t << " s";
    if (o.pass)
        o.detail = d.str();
    return o;
}

Outcome criterion_4(const std::vector<SweepItem>& sweep)
{
    Outcome o;
    double worst = 0.0;
    for (const SweepItem& it : sweep) {
        const double spread = compatibility_residual(it.pair, it.df) / it.pair.gap;
        const double c = compatibility_gap(it.pair.w_plus, it.pair.w_minus, it.df);
        const double off = std::abs(c - it.closed_gap) / it.closed_gap;
        worst = std::max({worst, spread, off});
        o.require(spread <= 1e-10, "non-constant f W+' - W+ W-");
        o.require(off <= 1e-10, "constant differs from the closed gap");
    }
    o.require(sweep.size() == 200, "sweep incomplete");
    std::ostringstream d;
    d << sweep.size() << " pairs, worst " << worst;
    if (o.pass)
        o.detail = d.str();
    return o;
}

Eigen::VectorXd grid_values(const RealFunction& psi, const DeformingFunction& df, int n)
{
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i)
        v(i) = psi(df.lower() + df.width() * (i + 1) / (n + 1));
    return v;
}

Outcome criterion_5()
{
    Outcome o;
    double worst_res = 0.0;
    double worst_ortho = 0.0;
    auto check_residuals = [&](const Level& l, int count) {
        const auto xs = interior_samples(l.df, 201);
        for (int k = 0; k < count; ++k) {
            const double r = residual(l.psi[k], l.V, l.df, l.energies[k], xs);
            worst_res = std::max(worst_res, r);
            o.require(r < 1e-7, l.name + " residual level " + std::to_string(k));
        }
    };
    for (const Level& l : figure_levels()) {
        check_residuals(l, 2);
        o.require(count_nodes(grid_values(l.psi[0], l.df, 4001)) == 0, l.name + " psi0 nodes");
        o.require(count_nodes(grid_values(l.psi[1], l.df, 4001)) == 1, l.name + " psi1 nodes");
        const double n0 = inner_product(l.psi[0], l.psi[0], l.df);
        const double n1 = inner_product(l.psi[1], l.psi[1], l.df);
        const double ov = std::abs(inner_product(l.psi[0], l.psi[1], l.df)) / std::sqrt(n0 * n1);
        worst_ortho = std::max(worst_ortho, ov);
        o.require(ov < 1e-8, l.name + " orthogonality");
        o.require(hermiticity_boundary_check(l.psi[0], l.df).pass, l.name + " hermiticity psi0");
        o.require(hermiticity_boundary_check(l.psi[1], l.df).pass, l.name + " hermiticity psi1");
    }
    for (const Level& l : baseline_levels())
        check_residuals(l, 4);
    std::ostringstream d;
    d << "max residual " << worst_res << ", max overlap " << worst_ortho;
    if (o.pass)
        o.detail = d.str();
    return o;
}

Outcome criterion_6()
{
    Outcome o;
    std::mt19937 gen(77);
    std::uniform_real_distribution<double> ut(0.25, 4.0), ua(-0.8, 0.8);
    for (int i = 0; i < 20; ++i) {
        const double A = ut(gen), B = ut(gen), a = ua(gen);
        const ExtendedOneParamSpec s = build_one_param(1, A, a);
        const printed::OneParamM1 p = printed::printed_m1(A, a);
        o.require(rel(s.A(0), p.A2) <= 1e-12 && rel(s.A(1), p.A4) <= 1e-12, "printed one-parameter potential");
        o.require(rel(s.E0, p.E0) <= 1e-12 && rel(s.E1, p.E1) <= 1e-12, "printed one-parameter energies");
        o.require(rel(s.psi0_form.f_exponent, p.f0) <= 1e-12 && rel(s.psi0_form.cos_exponent, p.c0) <= 1e-12
                      && rel(s.psi1_form.f_exponent, p.f1) <= 1e-12,
                  "printed one-parameter exponents");

        const ExtendedTwoParamSpec t = build_two_param(1, 1, A, B, a);
        const printed::TwoParamM11 q = printed::printed_m11(A, B, a);
        o.require(rel(t.A(0), q.A2) <= 1e-12 && rel(t.A(1), q.A4) <= 1e-12 && rel(t.B(0), q.B2) <= 1e-12
                      && rel(t.B(1), q.B4) <= 1e-12,
                  "printed (1,1) potential");
        o.require(rel(t.E0, q.E0) <= 1e-12 && rel(t.E1, q.E1) <= 1e-12, "printed (1,1) energies");
        o.require(rel(t.psi0_form.f_exponent, q.f0) <= 1e-12 && rel(t.psi0_form.cos_exponent, q.c0) <= 1e-12
                      && rel(t.psi0_form.sin_exponent, q.s0) <= 1e-12,
                  "printed (1,1) exponents");

        const ExtendedTwoParamSpec u = build_two_param(1, 0, A, B, a);
        const printed::TwoParamM10 w = printed::printed_m10(A, B, a);
        o.require(rel(u.A(0), w.A2) <= 1e-12 && rel(u.A(1), w.A4) <= 1e-12, "printed (1,0) potential");
        o.require(rel(u.E0, w.E0) <= 1e-12 && rel(u.E1, w.E1) <= 1e-12, "printed (1,0) energies");
        o.require(rel(u.psi0_form.f_exponent, w.f0) <= 1e-12 && rel(u.psi0_form.sin_exponent, w.s0) <= 1e-12,
                  "printed (1,0) exponents");
    }
    for (auto [m1, m2] : {std::pair{1, 1}, {2, 1}, {3, 1}, {1, 0}, {2, 0}})
        for (int i = 0; i < 5; ++i) {
            const double A = ut(gen), B = ut(gen), a = ua(gen);
            const ExtendedTwoParamSpec s = build_two_param(m1, m2, A, B, a);
            const ExtendedTwoParamSpec r = build_two_param(m2, m1, B, A, -a);
            o.require(rel(s.E0, r.E0) <= 1e-10 && rel(s.E1, r.E1) <= 1e-10, "reflected energies");
            for (int j = 1; j < 32; ++j) {
                const double x = std::numbers::pi / 2 * j / 32.0;
                o.require(rel(s.potential(x), r.potential(std::numbers::pi / 2 - x)) <= 1e-10, "reflected potential");
            }
        }
    const ExactOneParam e1 = ExactOneParam::make(2.0, 0.0);
    const ExactTwoParam e2 = ExactTwoParam::make(2.0, 2.0, 0.0);
    for (int n = 0; n <= 5; ++n) {
        o.require(rel(energy_one_param(e1, n), (2.0 + n) * (2.0 + n)) <= 1e-12, "alpha = 0 one-parameter limit");
        o.require(rel(energy_two_param(e2, n), (4.0 + 2 * n) * (4.0 + 2 * n)) <= 1e-12, "alpha = 0 two-parameter limit");
    }
    if (o.pass)
        o.detail = "m = 1 reductions, reflection and alpha = 0 limits";
    return o;
}

Outcome criterion_7()
{
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path() / "qestpt_acceptance_figures";
    std::filesystem::remove_all(dir);
    std::ostringstream out, err;
    const int code = cli::run_cli({"figures", "--out-dir", dir.string()}, out, err);
    o.require(code == 0, "figures exit code " + std::to_string(code));
    const double expected[6][2] = {{19.0 / 16, 115.0 / 16}, {19.0 / 16, 115.0 / 16}, {69.0 / 2, 293.0 / 2},
                                   {69.0 / 2, 293.0 / 2},   {629.0 / 16, 1381.0 / 16}, {629.0 / 16, 1381.0 / 16}};
    for (int i = 0; i < 6 && code == 0; ++i) {
        const std::string name = "fig" + std::to_string(i + 1) + ".csv";
        std::ifstream in(dir / name);
        std::string header, line;
        std::getline(in, header);
        auto value = [&](const std::string& key) {
            const auto at = header.find(key + "=");
            return at == std::string::npos ? NAN : std::stod(header.substr(at + key.size() + 1));
        };
        o.require(std::abs(value("E0") - expected[i][0]) <= 1e-12, name + " E0");
        o.require(std::abs(value("E1") - expected[i][1]) <= 1e-12, name + " E1");
        std::vector<double> p0, p1;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#' || line[0] == 'x')
                continue;
            double x, v, a, b;
            char c;
            std::istringstream s(line);
            s >> x >> c >> v >> c >> a >> c >> b;
            p0.push_back(a);
            p1.push_back(b);
        }
        o.require(count_nodes(Eigen::Map<Eigen::VectorXd>(p0.data(), p0.size())) == 0, name + " psi0 nodes");
        o.require(count_nodes(Eigen::Map<Eigen::VectorXd>(p1.data(), p1.size())) == 1, name + " psi1 nodes");
    }
    std::filesystem::remove_all(dir);
    if (o.pass)
        o.detail = "six files";
    return o;
}

}  // namespace

int main()
{
    std::vector<SweepItem> sweep;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"figure-caption energies", criterion_1},
        {"oracle spectral agreement", criterion_2},
        {"dual-path coefficient equality", [&] { return criterion_3(sweep); }},
        {"compatibility identity", [&] { return criterion_4(sweep); }},
        {"wavefunction correctness", criterion_5},
        {"reduction and symmetry", criterion_6},
        {"CLI figure regression", criterion_7},
    };
    int failures = 0;
    int index = 1;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << index++ << " (" << name << "): " << o.detail
                  << '\n';
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
