#pragma once

#include <stdexcept>
#include <string>

namespace framecalc {

/// Base class for all errors raised by the engine.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Requested division is not representable in the term algebra.
class NonDivisibleError : public Error {
public:
    explicit NonDivisibleError(const std::string& what) : Error(what) {}
};

/// Frame matrix could not be inverted by single-term pivoting.
class NonInvertibleFrameError : public Error {
public:
    explicit NonInvertibleFrameError(const std::string& what) : Error(what) {}
};

/// The coefficient of the unknown rate vanished in a trace equation.
class DegenerateTraceError : public Error {
public:
    explicit DegenerateTraceError(const std::string& what) : Error(what) {}
};

/// A formula that divides by a parameter was evaluated with that parameter bound to zero.
class DivisionByZeroParameterError : public Error {
public:
    explicit DivisionByZeroParameterError(const std::string& what) : Error(what) {}
};

/// Elimination left the supported expression algebra; no verdict possible.
class InconclusiveError : public Error {
public:
    explicit InconclusiveError(const std::string& what) : Error(what) {}
};

/// Text could not be parsed; `offset` is a 0-based byte position into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace framecalc
