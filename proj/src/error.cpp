#include "hestonlab/error.hpp"

namespace hestonlab {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonPositiveA: return "NonPositiveA";
        case ErrorCode::NonPositiveSigma: return "NonPositiveSigma";
        case ErrorCode::RhoOutOfRange: return "RhoOutOfRange";
        case ErrorCode::NonPositiveY0: return "NonPositiveY0";
        case ErrorCode::NonFiniteValue: return "NonFiniteValue";
        case ErrorCode::NotSubcritical: return "NotSubcritical";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::InvalidGrid: return "InvalidGrid";
        case ErrorCode::NegativeInput: return "NegativeInput";
        case ErrorCode::FellerViolated: return "FellerViolated";
        case ErrorCode::NonPositiveZ: return "NonPositiveZ";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::PathTooShort: return "PathTooShort";
        case ErrorCode::DegeneratePath: return "DegeneratePath";
        case ErrorCode::NonPositiveScalingDiscriminant: return "NonPositiveScalingDiscriminant";
        case ErrorCode::InsufficientData: return "InsufficientData";
        case ErrorCode::TiesDegenerate: return "TiesDegenerate";
        case ErrorCode::DegenerateSample: return "DegenerateSample";
        case ErrorCode::AllReplicatesFailed: return "AllReplicatesFailed";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
        case ErrorCode::CsvFormatError: return "CsvFormatError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace hestonlab
