#include "vass/error.hpp"

namespace vass {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::StateMismatch: return "StateMismatch";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NotSimpleCycle: return "NotSimpleCycle";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadIndices: return "BadIndices";
    case ErrorCode::NotSignReflecting: return "NotSignReflecting";
    case ErrorCode::DependentBasis: return "DependentBasis";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::VectorOutsidePlane: return "VectorOutsidePlane";
    case ErrorCode::NotStrictRotation: return "NotStrictRotation";
    case ErrorCode::PlaneMismatch: return "PlaneMismatch";
    case ErrorCode::NotDegenerate: return "NotDegenerate";
    case ErrorCode::NotGeoZero: return "NotGeoZero";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::WrongGdim: return "WrongGdim";
    case ErrorCode::GdimTooHigh: return "GdimTooHigh";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::UnknownState: return "UnknownState";
    case ErrorCode::DuplicateState: return "DuplicateState";
    case ErrorCode::DuplicateConfigName: return "DuplicateConfigName";
    case ErrorCode::Syntax: return "Syntax";
    }
    return "Unknown";
}

} // namespace vass
