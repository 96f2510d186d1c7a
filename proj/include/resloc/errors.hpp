#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resloc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text grammar violation; `position` is a 0-based byte offset into the input.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position(position) {}
    std::size_t position;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// det DX(0) = 0; the nondegenerate evaluation does not apply.
struct DegenerateZero : Error {
    using Error::Error;
};

// No power z_i^m reduced to zero up to the cap: either the zero is not
// isolated or the cap is too small to certify it.
struct NotIsolatedOrCapTooLow : Error {
    using Error::Error;
};

struct InvalidCertificate : Error {
    using Error::Error;
};

struct ResourceLimit : Error {
    using Error::Error;
};

// Quadrature nodes hit a point where |f| is below the safety floor.
struct SingularOnSphere : Error {
    using Error::Error;
};

}  // namespace resloc
