#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace moufang {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& reason)
        : Error("parse error at position " + std::to_string(position) + ": " + reason),
          position_(position), reason_(reason) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t position_;
    std::string reason_;
};

/// A product of three or more factors written without parentheses.
class AmbiguousBracketing : public ParseError {
public:
    explicit AmbiguousBracketing(std::size_t position)
        : ParseError(position, "products of three or more factors need explicit parentheses") {}
};

class ValidationFailure : public Error {
public:
    using Error::Error;
};

class UnboundVariable : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class ZeroSeed : public Error {
public:
    ZeroSeed() : Error("xorshift state must be nonzero") {}
};

class OrderNotFoundWithinCap : public Error {
public:
    using Error::Error;
};

// The next three signal a broken table transcription; they never fire on the
// shipped tables.
class InverseLawViolation : public Error {
public:
    using Error::Error;
};

class DivisionCheckFailed : public Error {
public:
    using Error::Error;
};

class WitnessFailed : public Error {
public:
    using Error::Error;
};

class PreconditionViolation : public Error {
public:
    using Error::Error;
};

}  // namespace moufang
