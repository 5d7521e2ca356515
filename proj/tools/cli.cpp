#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "qestpt/dsusy.hpp"
#include "qestpt/errors.hpp"
#include "qestpt/tpt_exact.hpp"
#include "qestpt/tpt_extended.hpp"

namespace qestpt::cli {

namespace {

using Value = std::variant<double, long long, std::string, bool>;

class Report {
public:
    void add(const std::string& key, Value v) { items_.emplace_back(key, std::move(v)); }

    void add_array(const std::string& prefix, const Eigen::VectorXd& v, int first, int step)
    {
        for (Eigen::Index i = 0; i < v.size(); ++i)
            add(prefix + std::to_string(first + step * i), v(i));
    }

    void emit(std::ostream& out, bool json) const
    {
        if (json) {
            nlohmann::ordered_json j = nlohmann::ordered_json::object();
            for (const auto& [k, v] : items_)
                std::visit([&](const auto& x) { j[k] = x; }, v);
            out << j.dump(2) << '\n';
            return;
        }
        for (const auto& [k, v] : items_) {
            out << k << '=';
            std::visit(
                [&](const auto& x) {
                    using T = std::decay_t<decltype(x)>;
                    if constexpr (std::is_same_v<T, bool>)
                        out << (x ? "true" : "false");
                    else if constexpr (std::is_same_v<T, double>)
                        out << std::setprecision(15) << x;
                    else
                        out << x;
                },
                v);
            out << '\n';
        }
    }

private:
    std::vector<std::pair<std::string, Value>> items_;
};

std::string format_params(const std::vector<std::pair<std::string, double>>& kv)
{
    std::ostringstream s;
    s << std::setprecision(17);
    for (std::size_t i = 0; i < kv.size(); ++i)
        s << (i ? ";" : "") << kv[i].first << '=' << kv[i].second;
    return s.str();
}

// shared between the exact/extend/verify/sample subcommands
struct FamilyArgs {
    bool one = false;
    bool two = false;
    int m = 0;
    int m1 = -1;
    int m2 = -1;
    std::optional<double> a_top;
    std::optional<double> b_top;
    double alpha = 0.0;
};

void add_family_options(CLI::App* cmd, FamilyArgs& fa)
{
    cmd->add_flag("--one", fa.one, "one-parameter family, f = 1 + alpha sin^2 x");
    cmd->add_flag("--two", fa.two, "two-parameter family, f = 1 + alpha cos 2x");
    cmd->add_option("-m", fa.m, "extension order of the one-parameter family");
    cmd->add_option("--m1", fa.m1, "sec-side order of the two-parameter family");
    cmd->add_option("--m2", fa.m2, "csc-side order of the two-parameter family");
    cmd->add_option("--atop", fa.a_top, "top sec coefficient");
    cmd->add_option("--btop", fa.b_top, "top csc coefficient (B_2 itself when m2 = 0)");
    cmd->add_option("--alpha", fa.alpha, "deformation parameter");
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void require_one_family(const FamilyArgs& fa)
{
    if (fa.one == fa.two)
        throw UsageError("exactly one of --one and --two is required");
}

SpecCase case_from_args(const FamilyArgs& fa)
{
    require_one_family(fa);
    if (!fa.a_top)
        throw UsageError("--atop is required");
    if (fa.one) {
        if (fa.m < 1)
            throw UsageError("-m >= 1 is required with --one");
        return one_param_case(fa.m, *fa.a_top, fa.alpha);
    }
    if (fa.m1 < 0 || fa.m2 < 0)
        throw UsageError("--m1 and --m2 are required with --two");
    if (!fa.b_top)
        throw UsageError("--btop is required with --two");
    return two_param_case(fa.m1, fa.m2, *fa.a_top, *fa.b_top, fa.alpha);
}

int cmd_exact(const FamilyArgs& fa, std::optional<double> A, std::optional<double> B, int nmax, Report& r)
{
    require_one_family(fa);
    if (!A)
        throw UsageError("-A is required");
    if (nmax < 0)
        throw UsageError("--nmax must be non-negative");
    if (fa.one) {
        const ExactOneParam p = ExactOneParam::make(*A, fa.alpha);
        r.add("family", std::string("one"));
        r.add("A", p.A);
        r.add("alpha", p.alpha);
        r.add("delta", p.delta);
        r.add("lambda", p.lambda);
        r.add("lambda_prime", p.lambda_prime);
        for (int n = 0; n <= nmax; ++n)
            r.add("E" + std::to_string(n), energy_one_param(p, n));
        return 0;
    }
    if (!B)
        throw UsageError("-B is required with --two");
    const ExactTwoParam p = ExactTwoParam::make(*A, *B, fa.alpha);
    r.add("family", std::string("two"));
    r.add("A", p.A);
    r.add("B", p.B);
    r.add("alpha", p.alpha);
    r.add("delta1", p.delta1);
    r.add("delta2", p.delta2);
    r.add("lambda", p.lambda);
    r.add("mu", p.mu);
    r.add("lambda_prime", p.lambda_prime);
    r.add("mu_prime", p.mu_prime);
    for (int n = 0; n <= nmax; ++n)
        r.add("E" + std::to_string(n), energy_two_param(p, n));
    return 0;
}

int cmd_extend(const FamilyArgs& fa, bool check, Report& r)
{
    require_one_family(fa);
    if (!fa.a_top)
        throw UsageError("--atop is required");
    if (fa.one) {
        if (fa.m < 1)
            throw UsageError("-m >= 1 is required with --one");
        const ExtendedOneParamSpec s = build_one_param(fa.m, *fa.a_top, fa.alpha);
        r.add("family", std::string("one"));
        r.add("m", static_cast<long long>(s.m));
        r.add("alpha", s.alpha);
        r.add("E0", s.E0);
        r.add("E1", s.E1);
        r.add("gap", s.gap);
        r.add_array("A", s.A, 2, 2);
        r.add_array("C", s.C, 1, 2);
        r.add_array("lambda", s.lambda, 0, 1);
        r.add_array("lambda_prime", s.lambda_prime, 0, 1);
        if (check) {
            const ExpansionResult ex = expand_and_resum_one_param(fa.m, *fa.a_top, fa.alpha);
            r.add("expansion_E0", ex.E0);
            r.add("max_discrepancy", s.dual_path_discrepancy);
        }
        return 0;
    }
    if (fa.m1 < 0 || fa.m2 < 0)
        throw UsageError("--m1 and --m2 are required with --two");
    if (!fa.b_top)
        throw UsageError("--btop is required with --two");
    const ExtendedTwoParamSpec s = build_two_param(fa.m1, fa.m2, *fa.a_top, *fa.b_top, fa.alpha);
    r.add("family", std::string("two"));
    r.add("m1", static_cast<long long>(fa.m1));
    r.add("m2", static_cast<long long>(fa.m2));
    r.add("alpha", fa.alpha);
    r.add("reflected", s.reflected);
    r.add("E0", s.E0);
    r.add("E1", s.E1);
    r.add("gap", s.gap);
    r.add_array("A", s.sec_coefficients(), 2, 2);
    r.add_array("B", s.csc_coefficients(), 2, 2);
    // C and D belong to the sec and csc sides of the canonical orientation
    r.add_array(s.reflected ? "D" : "C", s.C, 1, 1);
    r.add_array(s.reflected ? "C" : "D", s.D, 1, 1);
    if (fa.m2 == 0 || fa.m1 == 0)
        r.add("delta", s.delta_b);
    if (check) {
        const ExpansionResult ex = expand_and_resum_two_param(fa.m1, fa.m2, *fa.a_top, *fa.b_top, fa.alpha);
        r.add("expansion_E0", ex.E0);
        r.add("max_discrepancy", s.dual_path_discrepancy);
    }
    return 0;
}

int cmd_verify(SpecCase c, int N, std::optional<double> override_a2, Report& r)
{
    if (override_a2) {
        // the closed-form energies and wavefunctions stay those of the intact spec
        const RealFunction intact = c.V;
        const double shift = *override_a2 - c.a2;
        c.V = [intact, shift](double x) {
            const double s = 1.0 / std::cos(x);
            return intact(x) + shift * s * s;
        };
    }
    r.add("family", c.family);
    r.add("params", c.params);
    r.add("N", static_cast<long long>(N));
    bool all = true;
    auto verdict = [&](const std::string& name, bool pass, double value) {
        r.add(name, value);
        r.add("check_" + name, std::string(pass ? "PASS" : "FAIL"));
        all = all && pass;
    };

    const NumericSpectrum sp = solve_spectrum(c.V, c.deform, 2, N);
    const double rel0 = std::abs(sp.eigenvalues(0) - c.E0) / std::abs(c.E0);
    const double rel1 = std::abs(sp.eigenvalues(1) - c.E1) / std::abs(c.E1);
    r.add("E0_closed", c.E0);
    r.add("E0_numeric", sp.eigenvalues(0));
    r.add("E1_closed", c.E1);
    r.add("E1_numeric", sp.eigenvalues(1));
    verdict("spectral_rel_err", std::max(rel0, rel1) < 1e-6, std::max(rel0, rel1));

    const double raw_err = std::abs(sp.raw(0) - c.E0);
    const double coarse_err = std::abs(sp.coarse(0) - c.E0);
    // informational: a csc^2 endpoint with a small sin exponent limits the order
    r.add("convergence_ratio", raw_err > 0.0 ? coarse_err / raw_err : 0.0);

    const std::vector<double> xs = interior_samples(c.deform, 201);
    const double res0 = residual(c.psi0, c.V, c.deform, c.E0, xs);
    const double res1 = residual(c.psi1, c.V, c.deform, c.E1, xs);
    verdict("residual", std::max(res0, res1) < 1e-7, std::max(res0, res1));

    const DeformingFunction& d = c.deform;
    Eigen::VectorXd g0(4001), g1(4001);
    for (int i = 0; i < 4001; ++i) {
        const double x = d.lower() + d.width() * (i + 1) / 4002.0;
        g0(i) = c.psi0(x);
        g1(i) = c.psi1(x);
    }
    const int n0 = count_nodes(g0);
    const int n1 = count_nodes(g1);
    r.add("nodes_psi0", static_cast<long long>(n0));
    r.add("nodes_psi1", static_cast<long long>(n1));
    const bool sturm = count_nodes(sp.psi(0, d)) == 0 && count_nodes(sp.psi(1, d)) == 1;
    verdict("nodes", n0 == 0 && n1 == 1 && sturm, static_cast<double>(n0 + n1));

    const double n00 = inner_product(c.psi0, c.psi0, d);
    const double n11 = inner_product(c.psi1, c.psi1, d);
    const double ortho = std::abs(inner_product(c.psi0, c.psi1, d)) / std::sqrt(n00 * n11);
    verdict("orthogonality", ortho < 1e-8, ortho);

    const HermiticityReport h0 = hermiticity_boundary_check(c.psi0, d);
    const HermiticityReport h1 = hermiticity_boundary_check(c.psi1, d);
    verdict("hermiticity", h0.pass && h1.pass,
            std::max({h0.lower_limit, h0.upper_limit, h1.lower_limit, h1.upper_limit}));

    const double dist = eigenvector_distance(sp, 0, c.psi0, d);
    verdict("eigenvector_distance", dist < 1e-4, dist);

    r.add("result", std::string(all ? "PASS" : "FAIL"));
    return all ? 0 : 1;
}

bool writable_target(const std::string& path)
{
    std::ofstream probe(path, std::ios::app);
    return static_cast<bool>(probe);
}

}  // namespace

SpecCase one_param_case(int m, double a_top, double alpha)
{
    auto s = std::make_shared<const ExtendedOneParamSpec>(build_one_param(m, a_top, alpha));
    SpecCase c;
    c.family = "one";
    c.params = format_params({{"m", m}, {"atop", a_top}, {"alpha", alpha}});
    c.deform = s->deform;
    c.V = [s](double x) { return s->potential(x); };
    c.psi0 = [s](double x) { return psi0_closed_one_param(*s, x); };
    c.psi1 = [s](double x) { return psi1_closed_one_param(*s, x); };
    c.E0 = s->E0;
    c.E1 = s->E1;
    c.a2 = s->A(0);
    return c;
}

SpecCase two_param_case(int m1, int m2, double a_top, double b_top, double alpha)
{
    auto s = std::make_shared<const ExtendedTwoParamSpec>(build_two_param(m1, m2, a_top, b_top, alpha));
    SpecCase c;
    c.family = "two";
    c.params = format_params({{"m1", m1}, {"m2", m2}, {"atop", a_top}, {"btop", b_top}, {"alpha", alpha}});
    c.deform = s->user_deform();
    c.V = [s](double x) { return s->potential(x); };
    c.psi0 = [s](double x) { return s->psi0(x); };
    c.psi1 = [s](double x) { return s->psi1(x); };
    c.E0 = s->E0;
    c.E1 = s->E1;
    c.a2 = s->sec_coefficients()(0);
    return c;
}

std::vector<SpecCase> figure_cases()
{
    const SpecCase a = one_param_case(1, 1.0, -0.5);
    const SpecCase b = two_param_case(1, 1, 1.0, 1.0, 0.5);
    const SpecCase c = two_param_case(1, 0, 1.0, 1.0, 0.5);
    return {a, a, b, b, c, c};
}

bool write_sample_csv(const SpecCase& c, int points, const std::string& path)
{
    if (points < 2)
        throw DomainError("sample needs at least two points");
    std::ofstream out(path);
    if (!out)
        return false;
    const DeformingFunction& d = c.deform;
    const double norm0 = std::sqrt(inner_product(c.psi0, c.psi0, d));
    const double norm1 = std::sqrt(inner_product(c.psi1, c.psi1, d));
    out << std::setprecision(17);
    out << "# family=" << c.family << ", params=" << c.params << ", E0=" << c.E0 << ", E1=" << c.E1 << '\n';
    out << "# norm0=" << norm0 << ", norm1=" << norm1 << '\n';
    out << "x,V,psi0,psi1\n";
    const double inset = 1e-3 * d.width();
    const double a = d.lower() + inset;
    const double span = d.width() - 2.0 * inset;
    for (int i = 0; i < points; ++i) {
        const double x = a + span * i / (points - 1);
        out << x << ',' << c.V(x) << ',' << c.psi0(x) / norm0 << ',' << c.psi1(x) / norm1 << '\n';
    }
    return static_cast<bool>(out);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quasi-exactly solvable position-dependent-mass Poschl-Teller families", "qestpt"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "print a flat JSON object instead of key=value lines");

    FamilyArgs fa;
    std::optional<double> A;
    std::optional<double> B;
    int nmax = 1;
    bool check = false;
    int N = 4000;
    std::optional<double> override_a2;
    int points = 2001;
    std::string out_path;
    std::string out_dir = ".";

    CLI::App* exact = app.add_subcommand("exact", "spectrum of the exactly solvable baseline");
    add_family_options(exact, fa);
    exact->add_option("-A", A, "A of A(A-1) sec^2 x");
    exact->add_option("-B", B, "B of B(B-1) csc^2 x");
    exact->add_option("--nmax", nmax, "highest level printed");

    CLI::App* extend = app.add_subcommand("extend", "closed forms of an extended potential");
    add_family_options(extend, fa);
    extend->add_flag("--check", check, "also report the expansion-path discrepancy");

    CLI::App* verify = app.add_subcommand("verify", "check closed forms against the finite-difference oracle");
    add_family_options(verify, fa);
    verify->add_option("-N", N, "interior grid points");
    verify->add_option("--override-a2", override_a2, "replace the sec^2 coefficient of V");

    CLI::App* sample = app.add_subcommand("sample", "write x, V, psi0, psi1 as CSV");
    add_family_options(sample, fa);
    sample->add_option("--points", points, "number of data rows");
    sample->add_option("--out", out_path, "output file")->required();

    CLI::App* figures = app.add_subcommand("figures", "write fig1.csv .. fig6.csv");
    figures->add_option("--points", points, "number of data rows per file");
    figures->add_option("--out-dir", out_dir, "output directory");

    for (CLI::App* sub : {exact, extend, verify, sample, figures})
        sub->add_flag("--json", json, "print a flat JSON object instead of key=value lines");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return 2;
    }

    Report report;
    int code = 0;
    try {
        if (exact->parsed()) {
            code = cmd_exact(fa, A, B, nmax, report);
        } else if (extend->parsed()) {
            code = cmd_extend(fa, check, report);
        } else if (verify->parsed()) {
            if (N < 64)
                throw UsageError("-N must be at least 64");
            code = cmd_verify(case_from_args(fa), N, override_a2, report);
        } else if (sample->parsed()) {
            const SpecCase c = case_from_args(fa);
            if (points < 2)
                throw UsageError("--points must be at least 2");
            if (!writable_target(out_path)) {
                err << "error: cannot write " << out_path << '\n';
                return 3;
            }
            if (!write_sample_csv(c, points, out_path)) {
                err << "error: cannot write " << out_path << '\n';
                return 3;
            }
            report.add("file", out_path);
            report.add("rows", static_cast<long long>(points));
            report.add("E0", c.E0);
            report.add("E1", c.E1);
        } else if (figures->parsed()) {
            if (points < 2)
                throw UsageError("--points must be at least 2");
            std::error_code ec;
            std::filesystem::create_directories(out_dir, ec);
            const std::vector<SpecCase> cases = figure_cases();
            std::vector<std::string> paths;
            std::vector<std::future<bool>> jobs;
            for (std::size_t i = 0; i < cases.size(); ++i) {
                paths.push_back((std::filesystem::path(out_dir) / ("fig" + std::to_string(i + 1) + ".csv")).string());
                jobs.push_back(std::async(std::launch::async, [&cases, &paths, i, points] {
                    return write_sample_csv(cases[i], points, paths[i]);
                }));
            }
            bool ok = true;
            for (auto& j : jobs)
                ok = j.get() && ok;
            if (!ok) {
                err << "error: cannot write into " << out_dir << '\n';
                return 3;
            }
            for (std::size_t i = 0; i < cases.size(); ++i) {
                report.add("fig" + std::to_string(i + 1), paths[i]);
                report.add("fig" + std::to_string(i + 1) + "_E0", cases[i].E0);
                report.add("fig" + std::to_string(i + 1) + "_E1", cases[i].E1);
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    report.emit(out, json);
    return code;
}

}  // namespace qestpt::cli
