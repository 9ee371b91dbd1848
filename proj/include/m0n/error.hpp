#pragma once

#include <stdexcept>
#include <string>

namespace m0n {

enum class ErrorCode {
    InvalidArgument,
    ParseError,
    InvalidPoint,
    InvalidMobius,
    CoincidentPoints,
    InvalidTree,
    OverlappingMarkingSets,
    TooFewMarkings,
    InvalidPartition,
    OutOfRange,
    DegenerateConfiguration,
    TooDegenerateType,
    NotMultilinear,
    MissingVariable,
    IndexOutOfRange,
    GradeMismatch,
    OverlappingLabels,
    BadReduction,
    InsufficientSamples,
};

const char* error_name(ErrorCode code) noexcept;

/// Domain error raised by every module; `name()` is the stable identifier
/// reported by the CLI.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }
    const char* name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

}  // namespace m0n
