#pragma once

#include <stdexcept>
#include <string>

namespace ncover {

/// Malformed or out-of-range caller input (bad n, divisor, type string, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A quantity that is undefined for the given argument, e.g. g(n) for a prime power.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Primitive data file that cannot be used for the requested instance.
class LoadError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Some cycle type is covered by no class of the universe.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(const std::string& what, std::string witness)
        : std::runtime_error(what), witness_(std::move(witness)) {}

    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

} // namespace ncover
