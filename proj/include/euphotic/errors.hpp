#pragma once

#include <stdexcept>
#include <string>

namespace euphotic {

/// Malformed or out-of-domain input. Maps to CLI exit code 1.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// The request is well-formed but exceeds an enumeration cap or is outside
/// the supported class (e.g. full Weyl group of E7/E8).
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

/// Two independent computations disagreed. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

/// Derived data is inconsistent with itself (e.g. a divisibility that must hold).
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace euphotic
