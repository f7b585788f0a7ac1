#pragma once

#include <stdexcept>
#include <string>

namespace lozi {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (numbers, symbol words, file formats).
struct ParseError : Error {
    using Error::Error;
};

/// Structurally valid input that violates a documented precondition,
/// e.g. parameters outside the admitted range or a point that does not
/// lie on the unstable manifold window.
struct DomainError : Error {
    using Error::Error;
};

/// Arithmetic between quadratic extension values attached to different
/// field contexts.
struct MixedFieldError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

/// The manifold window construction met geometry it cannot handle,
/// e.g. a degenerate image segment.
struct GrowthError : Error {
    using Error::Error;
};

/// A reconstruction needed symbolic data beyond the recorded truncation
/// depth of its input.
struct TruncationError : Error {
    using Error::Error;
};

/// A float-mode orbit left the admissible region (rasterizer only).
struct DivergenceError : Error {
    using Error::Error;
};

} // namespace lozi
