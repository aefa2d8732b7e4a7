#pragma once

#include <stdexcept>
#include <string>

namespace wreathlab {

/// A requested computation exceeds a configured size cap.  The message names
/// the cap and the CLI flag that raises it.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Input data violates a structural requirement (bad table, malformed vertex, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wreathlab
