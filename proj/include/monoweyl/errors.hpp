#pragma once

#include <stdexcept>
#include <string>

namespace monoweyl {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An operation mixed natural-mode and rational-mode values.
class ModeMismatch : public Error {
public:
    explicit ModeMismatch(const std::string& msg) : Error(msg) {}
};

/// A construction would require a non-natural exponent in natural mode.
class NaturalModeViolation : public Error {
public:
    explicit NaturalModeViolation(const std::string& msg) : Error(msg) {}
};

/// The zero operator was passed where a nonzero one is required.
class ZeroOperatorError : public Error {
public:
    explicit ZeroOperatorError(const std::string& msg) : Error(msg) {}
};

class ZeroVectorError : public Error {
public:
    explicit ZeroVectorError(const std::string& msg) : Error(msg) {}
};

class ZeroScaleError : public Error {
public:
    explicit ZeroScaleError(const std::string& msg) : Error(msg) {}
};

/// Exponent set too small for the requested classification.
class TooSmallError : public Error {
public:
    explicit TooSmallError(const std::string& msg) : Error(msg) {}
};

class PreconditionFailed : public Error {
public:
    explicit PreconditionFailed(const std::string& msg) : Error(msg) {}
};

/// Malformed expression text; `position` is a 0-based offset into the input.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace monoweyl
