#pragma once

#include <stdexcept>
#include <string>

namespace wplab {

// Bad arguments or preconditions: out-of-range parameters, wrong series kind,
// points outside the domain of an operation.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An algorithm ran but failed numerically (non-convergence, loss of positive
// definiteness). Carries the last residual when one exists.
class NumericalFailure : public std::runtime_error {
public:
    explicit NumericalFailure(const std::string& what, double residual = 0.0)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

} // namespace wplab
