#pragma once

#include <stdexcept>
#include <string>

namespace splines {

/// Malformed call: empty input list, unparsable argument.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input violates a precondition (nonpositive label, length mismatch, wrong family).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Search would exceed the configured work budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal invariant failed. Never expected in a correct build.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace splines
