#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grossone {

enum class ErrorKind {
    SyntaxError,
    LevelExceeded,
    Undecided,
    ZeroInput,
    DivisionByZero,
    NotExactlyDivisible,
    NotRepresentable,
    NotDisjoint,
    SegmentOverflow,
    PrecisionExhausted,
    BudgetExceeded,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every domain failure of the library is reported through this exception;
/// the kind decides how callers (the CLI in particular) react.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string &what)
        : Error(ErrorKind::SyntaxError, what + " at position " + std::to_string(position)),
          position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace grossone
