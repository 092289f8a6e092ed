#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mpcx {

enum class ErrorCode {
    InvalidParameters,
    NodeOutOfRange,
    ParseError,
    IoError,
    GenerationExhausted,
    EnumerationTooLarge,
    NotSimulable,
    EmptyDataset,
    MissingTargets,
    UnsupportedArch,
    UnknownChannel,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Raised when exact enumeration would have to branch over more message
// channels than the configured cap; carries the offending channel count.
class EnumerationTooLargeError : public Error {
public:
    EnumerationTooLargeError(std::size_t channels, std::size_t cap)
        : Error(ErrorCode::EnumerationTooLarge,
                "exact enumeration needs " + std::to_string(channels) +
                    " message channels, cap is " + std::to_string(cap)),
          channels_(channels) {}

    std::size_t channels() const noexcept { return channels_; }

private:
    std::size_t channels_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace mpcx
