#pragma once

#include <stdexcept>
#include <string>

namespace obsdesign {

/// Invalid parameters or an unsupported combination of inputs.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the validity range of a numerical routine.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A numerical procedure failed to converge or hit a singular case.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The initial data produce no usable energy density (e.g. all-zero data).
class DegenerateDesignError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// A positivity or feasibility claim could not be verified numerically.
class CertificationError : public std::runtime_error {
public:
    CertificationError(const std::string& what, long offending_index)
        : std::runtime_error(what), offending_index_(offending_index) {}

    long offending_index() const noexcept { return offending_index_; }

private:
    long offending_index_;
};

}  // namespace obsdesign
