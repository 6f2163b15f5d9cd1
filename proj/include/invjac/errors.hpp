#pragma once

#include <stdexcept>
#include <string>

namespace invjac {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text did not conform to the polynomial grammar. `position` is a 0-based
// byte offset into the input.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

// A graded piece would exceed the configured monomial cap.
struct DimensionCapError : Error {
    using Error::Error;
};

// Two objects that must live in the same ambient space do not.
struct AmbientMismatchError : Error {
    using Error::Error;
};

// A degree precondition was violated (zero input, wrong degree, mixed degrees).
struct DegreeError : Error {
    using Error::Error;
};

} // namespace invjac
