#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace currier {

// Error kinds surfaced across the library boundary. Values are stable and
// mirrored one-to-one by the C API status codes in currier.h.
enum class ErrorCode {
    Io = 1,
    Parse = 2,
    DuplicateInstanceId = 3,
    EmptyCorpus = 4,
    EmptyDatasetId = 5,
    MissingInstance = 6,
    UnknownInstance = 7,
    ShapeMismatch = 8,
    OutOfRange = 9,
    DuplicateRecord = 10,
    TooFewInstances = 11,
    BadN = 12,
    MetaMismatch = 13,
    ModeMismatch = 14,
    BadK = 15,
    DegenerateScores = 16,
    BadFrac = 17,
    BadSpec = 18,
    OrderCorpusMismatch = 19,
    BucketMismatch = 20,
    KeyMismatch = 21,
    BadBinWidth = 22,
    InvalidArgument = 23,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace currier
