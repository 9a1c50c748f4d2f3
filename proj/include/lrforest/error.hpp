#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lrforest {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (number literals, matrix literals, words).
/// `position` is the byte offset of the first offending character.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Input outside an operation's domain: a point not in the open quadrant,
/// a matrix with the wrong determinant or sign pattern, a zero divisor.
struct DomainError : Error {
    using Error::Error;
};

/// trace_to_root exceeded its step limit. Every point of the quadrant
/// reaches an orphan in finitely many steps, so hitting this signals a
/// bug rather than a long input.
struct StepLimitError : Error {
    using Error::Error;
};

/// Requested orbit depth exceeds the configured cap.
struct DepthCapError : Error {
    using Error::Error;
};

} // namespace lrforest
