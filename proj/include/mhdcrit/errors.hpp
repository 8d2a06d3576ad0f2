#pragma once

#include <stdexcept>
#include <string>

namespace mhdcrit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridMismatch : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

/// Iterative solve failed to reach its tolerance; carries the last residual.
struct ConvergenceError : Error {
    ConvergenceError(const std::string& what, double residual, int iters)
        : Error(what + " (residual " + std::to_string(residual) + " after " +
                std::to_string(iters) + " iterations)"),
          last_residual(residual),
          iterations(iters) {}
    double last_residual;
    int iterations;
};

/// A time step was rejected before any state was modified.
struct StepRejected : Error {
    StepRejected(const std::string& what, double cfl_number)
        : Error(what), cfl(cfl_number) {}
    double cfl;
};

}  // namespace mhdcrit
