#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lzeta {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by the expression parser; `position` is a byte offset into the input.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Exponent arithmetic left the signed 64-bit range.
struct OverflowError : Error {
    using Error::Error;
};

/// p is not prime, divides a coefficient denominator, or is too small for a
/// denominator-clearing shift.
struct BadPrime : Error {
    using Error::Error;
};

/// Newton polytope is a point or a segment; the pipeline requires dimension 2.
struct HullDimensionError : Error {
    HullDimensionError(const std::string& what, int dim) : Error(what), dim(dim) {}
    int dim;
};

/// Numeric evaluation requested at (or too close to) a pole.
struct PoleHit : Error {
    using Error::Error;
};

/// Oracle parameter outside its validity range, e.g. s outside (0, alpha).
struct OracleDomainError : Error {
    using Error::Error;
};

}  // namespace lzeta
