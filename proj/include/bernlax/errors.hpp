#ifndef BERNLAX_ERRORS_HPP
#define BERNLAX_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace bernlax {

// A documented precondition of an operation was violated by the caller.
struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Evaluation requested outside the mathematical domain (e.g. a Laurent
// polynomial with negative powers at z = 0, or the Koebe map at z = -1).
struct EvalDomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Input exceeds a configured size limit.
struct SizeError : std::length_error {
    using std::length_error::length_error;
};

// An exact value does not fit the target floating type.
struct OverflowError : std::range_error {
    using std::range_error::range_error;
};

// An identity that holds by construction failed numerically; this signals
// a bug in the construction, not bad input.
struct InternalConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// A certified hypothesis of an inequality does not hold for the input.
struct HypothesisViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The Laurent input is not nonnegative on the unit circle; carries the
// angle at which negativity (or an unpairable root) was detected.
struct NotNonnegativeError : std::runtime_error {
    NotNonnegativeError(const std::string& what, double angle)
        : std::runtime_error(what), witness_angle(angle) {}
    double witness_angle;
};

// The iterative root finder exhausted its sweep budget without meeting the
// residual contract; carries the best iterate found.
struct RootConvergenceError : std::runtime_error {
    RootConvergenceError(const std::string& what,
                         std::vector<std::complex<double>> iterate)
        : std::runtime_error(what), best_iterate(std::move(iterate)) {}
    std::vector<std::complex<double>> best_iterate;
};

// The LP working set fails to pin the objective.
struct UnboundedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structured input file could not be parsed or failed validation.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace bernlax

#endif
