#pragma once

#include <stdexcept>
#include <string>

namespace tracemin {

// Raised when an operation would blow past one of the documented resource
// guards (canonicalization cap, dense eigensolver cap, enumeration guard).
// Distinct from std::invalid_argument so callers can map it to a dedicated
// exit code instead of treating it as bad input.
class guard_error : public std::runtime_error {
public:
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tracemin
