#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hestonlab {

enum class ErrorCode {
    NonPositiveA,
    NonPositiveSigma,
    RhoOutOfRange,
    NonPositiveY0,
    NonFiniteValue,
    NotSubcritical,
    InvalidArgument,
    InvalidGrid,
    NegativeInput,
    FellerViolated,
    NonPositiveZ,
    LengthMismatch,
    PathTooShort,
    DegeneratePath,
    NonPositiveScalingDiscriminant,
    InsufficientData,
    TiesDegenerate,
    DegenerateSample,
    AllReplicatesFailed,
    ParseError,
    ValidationError,
    CsvFormatError,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries a machine-readable code so
// callers (the Monte Carlo driver, the CLI) can classify it.
class HestonError : public std::runtime_error {
public:
    HestonError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hestonlab
