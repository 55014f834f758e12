#pragma once

#include <stdexcept>
#include <string>

namespace basel {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Request exceeds a configured resource cap (e.g. sequence index too large).
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A numerical method failed to reach the requested tolerance.
/// Carries the best value obtained so the caller can still inspect it.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double best_value, double err_estimate)
        : std::runtime_error(what), best_value_(best_value), err_estimate_(err_estimate) {}

    double best_value() const noexcept { return best_value_; }
    double err_estimate() const noexcept { return err_estimate_; }

private:
    double best_value_;
    double err_estimate_;
};

/// Bad user input at the API boundary (unknown check id, bad flag value).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace basel
