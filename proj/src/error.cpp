#include "m0n/error.hpp"

namespace m0n {

const char* error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidPoint: return "InvalidPoint";
        case ErrorCode::InvalidMobius: return "InvalidMobius";
        case ErrorCode::CoincidentPoints: return "CoincidentPoints";
        case ErrorCode::InvalidTree: return "InvalidTree";
        case ErrorCode::OverlappingMarkingSets: return "OverlappingMarkingSets";
        case ErrorCode::TooFewMarkings: return "TooFewMarkings";
        case ErrorCode::InvalidPartition: return "InvalidPartition";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
        case ErrorCode::TooDegenerateType: return "TooDegenerateType";
        case ErrorCode::NotMultilinear: return "NotMultilinear";
        case ErrorCode::MissingVariable: return "MissingVariable";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::GradeMismatch: return "GradeMismatch";
        case ErrorCode::OverlappingLabels: return "OverlappingLabels";
        case ErrorCode::BadReduction: return "BadReduction";
        case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

}  // namespace m0n
