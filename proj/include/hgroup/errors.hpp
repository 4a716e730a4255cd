#pragma once

#include <stdexcept>
#include <string>

namespace hgroup {

enum class ErrorCode {
    IndexOutOfRange,
    TruncationOverflow,
    ZeroDiagonal,
    HaarUnavailable,
    InvalidTable,
    NotCommutative,
    NotLatinSquare,
    NoIdentity,
    NotAssociative,
    NonIntegerDimension,
    DegenerateSpectrum,
    DominationFailure,
    SingularCharacterBasis,
    SizeOverflow,
    InvalidParameter,
    ParseError,
    ReciprocityViolation,
    ZeroValue,
    UnboundedValueSet,
    P2Failure,
    NotNaturalIndexed,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace hgroup
