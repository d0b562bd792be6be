#pragma once

#include <stdexcept>

namespace kraw {

// Invalid argument values: bad indices, mismatched dimensions, malformed input.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured size cap would be exceeded.  Raised before any large
// allocation happens, so callers can catch it and degrade gracefully.
class ResourceError : public std::length_error {
public:
    using std::length_error::length_error;
};

// An arithmetic fact that must hold by construction failed, e.g. a column
// division that is guaranteed exact left a remainder.  Signals corrupted
// input data rather than a usage mistake.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace kraw
