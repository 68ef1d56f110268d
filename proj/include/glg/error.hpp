#pragma once

#include <stdexcept>
#include <string>

namespace glg {

enum class ErrorCode {
    NegativeWeight,
    SelfLoop,
    IndexOutOfRange,
    DuplicateEdge,
    Disconnected,
    DimensionMismatch,
    NonPositiveSigma,
    TooLargeForExactMode,
    NumericalFailure,
    NoConvergence,
    EmptySeries,
    BadK,
    DegenerateData,
    DegenerateInput,
    DuplicatePoints,
    ParseError,
    IoError,
    BadConfig,
};

const char* error_code_name(ErrorCode code);

// All library failures are reported through this type; code() stays
// machine-parseable while what() carries the human-readable context.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace glg
