#include "hgroup/errors.hpp"

namespace hgroup {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::TruncationOverflow: return "TruncationOverflow";
        case ErrorCode::ZeroDiagonal: return "ZeroDiagonal";
        case ErrorCode::HaarUnavailable: return "HaarUnavailable";
        case ErrorCode::InvalidTable: return "InvalidTable";
        case ErrorCode::NotCommutative: return "NotCommutative";
        case ErrorCode::NotLatinSquare: return "NotLatinSquare";
        case ErrorCode::NoIdentity: return "NoIdentity";
        case ErrorCode::NotAssociative: return "NotAssociative";
        case ErrorCode::NonIntegerDimension: return "NonIntegerDimension";
        case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
        case ErrorCode::DominationFailure: return "DominationFailure";
        case ErrorCode::SingularCharacterBasis: return "SingularCharacterBasis";
        case ErrorCode::SizeOverflow: return "SizeOverflow";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ReciprocityViolation: return "ReciprocityViolation";
        case ErrorCode::ZeroValue: return "ZeroValue";
        case ErrorCode::UnboundedValueSet: return "UnboundedValueSet";
        case ErrorCode::P2Failure: return "P2Failure";
        case ErrorCode::NotNaturalIndexed: return "NotNaturalIndexed";
    }
    return "Error";
}

}  // namespace hgroup
