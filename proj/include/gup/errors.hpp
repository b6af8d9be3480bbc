#pragma once

#include <stdexcept>
#include <string>

namespace gup {

/// Input outside the mathematical domain of an operation
/// (e.g. evaluating the momentum map at |k| >= k_max).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// A structural or admissibility check failed (bad coefficients,
/// inconsistent configuration, malformed input file).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical routine could not certify the requested accuracy.
/// Carries the best estimate obtained and the error bound achieved,
/// so callers can degrade gracefully or report honestly.
struct accuracy_error : std::runtime_error {
    accuracy_error(const std::string& what, double best, double bound)
        : std::runtime_error(what), best_estimate(best), error_bound(bound) {}
    double best_estimate;
    double error_bound;
};

/// An iterative solver failed to converge within its iteration budget.
struct solver_error : std::runtime_error {
    explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gup
