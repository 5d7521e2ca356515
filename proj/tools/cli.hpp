#ifndef QESTPT_TOOLS_CLI_HPP
#define QESTPT_TOOLS_CLI_HPP

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "qestpt/deforming.hpp"
#include "qestpt/numeric_verify.hpp"

namespace qestpt::cli {

/// Everything the verify/sample/figures commands need from one spec.
struct SpecCase {
    std::string family;  ///< "one" or "two"
    std::string params;  ///< "m=1;atop=1;alpha=-0.5" style
    DeformingFunction deform = DeformingFunction::trig_one(0.0);
    RealFunction V;
    RealFunction psi0;
    RealFunction psi1;
    double E0 = 0.0;
    double E1 = 0.0;
    double a2 = 0.0;  ///< sec^2 x coefficient of V
};

SpecCase one_param_case(int m, double a_top, double alpha);
SpecCase two_param_case(int m1, int m2, double a_top, double b_top, double alpha);

/// The parameter sets of the six canonical figures (1-2, 3-4, 5-6 share one).
std::vector<SpecCase> figure_cases();

/// Writes a sample CSV; returns false when the file cannot be opened.
bool write_sample_csv(const SpecCase& c, int points, const std::string& path);

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 verification failure, 2 bad arguments, 3 unwritable output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qestpt::cli

#endif  // QESTPT_TOOLS_CLI_HPP
