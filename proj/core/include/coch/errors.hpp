#pragma once

#include <stdexcept>
#include <string>

namespace coch {

/* Shape or field mismatches between operands. */
struct DimensionError : std::runtime_error {
    explicit DimensionError(const std::string& msg) : std::runtime_error(msg) {}
};

/* A documented precondition of an operation was violated by the caller. */
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

/* An identity that must hold by construction failed; indicates corrupted
 * input data or a bug, never a user error. */
struct InvariantViolation : std::runtime_error {
    explicit InvariantViolation(const std::string& msg) : std::runtime_error(msg) {}
};

/* Malformed input file or JSON value; the message carries the location. */
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace coch
