#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vass {

enum class ErrorCode {
    NotAPath,
    DimensionMismatch,
    StateMismatch,
    SelfLoop,
    NotSimpleCycle,
    TooLarge,
    BadIndices,
    NotSignReflecting,
    DependentBasis,
    ZeroDirection,
    VectorOutsidePlane,
    NotStrictRotation,
    PlaneMismatch,
    NotDegenerate,
    NotGeoZero,
    WrongDimension,
    WrongGdim,
    GdimTooHigh,
    Precondition,
    UnknownState,
    DuplicateState,
    DuplicateConfigName,
    Syntax,
};

std::string_view to_string(ErrorCode code);

/// Every module reports contract violations through this exception type.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failures carry the 1-based line number of the offending directive.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::size_t line, const std::string& message)
        : Error(code, "line " + std::to_string(line) + ": " + message), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace vass
