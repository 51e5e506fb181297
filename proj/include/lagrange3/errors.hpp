#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lagrange3 {

enum class ErrorKind {
    ParseError,
    OddRun,
    NotPositive,
    BadShape,
    NotDecodable,
    NotTypeable,
    Constant,
    EitherOp,
    MismatchBug,
    Undecidable,
    BadSpec,
    NotIncreasing,
    NoDivergenceFound,
    NotFound,
    NotMarkovNumber,
    InversionNotInteger,
    DepthTooLarge,
    BadArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// Malformed literal; `offset` is the 0-based character index.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error(ErrorKind::ParseError, what + " at offset " + std::to_string(offset)), offset_(offset)
    {
    }
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// A run of equal {1,2} letters of odd length starting at `position`.
class OddRun : public Error {
public:
    OddRun(std::size_t position, std::size_t length)
        : Error(ErrorKind::OddRun, "odd run of length " + std::to_string(length) + " at position " +
                                       std::to_string(position)),
          position_(position),
          length_(length)
    {
    }
    std::size_t position() const { return position_; }
    std::size_t length() const { return length_; }

private:
    std::size_t position_;
    std::size_t length_;
};

}  // namespace lagrange3
