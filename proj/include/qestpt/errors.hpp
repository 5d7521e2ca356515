#ifndef QESTPT_ERRORS_HPP
#define QESTPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qestpt {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A candidate (W+, W-) pair does not satisfy f W+' - W+ W- = const.
class CompatibilityError : public std::runtime_error {
public:
    CompatibilityError(const std::string& what, double max_residual)
        : std::runtime_error(what), max_residual_(max_residual) {}

    double max_residual() const noexcept { return max_residual_; }

private:
    double max_residual_;
};

/// The compatibility constant exists but is not positive.
class GapSignError : public std::runtime_error {
public:
    GapSignError(const std::string& what, double gap)
        : std::runtime_error(what), gap_(gap) {}

    double gap() const noexcept { return gap_; }

private:
    double gap_;
};

/// Quadrature or eigensolver failure.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent evaluation routes disagree. Always a bug.
class ConsistencyError : public std::logic_error {
public:
    ConsistencyError(const std::string& what, double discrepancy)
        : std::logic_error(what), discrepancy_(discrepancy) {}

    double discrepancy() const noexcept { return discrepancy_; }

private:
    double discrepancy_;
};

}  // namespace qestpt

#endif  // QESTPT_ERRORS_HPP
