#pragma once

#include <stdexcept>
#include <string>

namespace tevs {

enum class ErrorCode {
    NonMonotoneTimestamps,
    ZeroSpatialValue,
    DimensionMismatch,
    NonFiniteValue,
    NonFiniteScalar,
    ParseError,
    SizeLimitExceeded,
    NegativeSquare,
    EmptySeries,
    EmptyFamily,
    AsymmetricInput,
    InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable error category.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace tevs
