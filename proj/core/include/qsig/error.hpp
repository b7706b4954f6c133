#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qsig {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad files, inconsistent dimensions, invalid parameters.
class InputError : public Error {
public:
    using Error::Error;
};

// Iterative solver failed to reach tolerance or diverged.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, std::vector<double> residuals)
        : Error(what), residuals_(std::move(residuals)) {}

    const std::vector<double>& residuals() const noexcept { return residuals_; }
    double last_residual() const noexcept { return residuals_.empty() ? 0.0 : residuals_.back(); }

private:
    std::vector<double> residuals_;
};

// Requested size exceeds a configured cap (e.g. statevector qubits).
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace qsig
