#pragma once

#include <stdexcept>
#include <string>

namespace vgos {

// Error taxonomy shared across modules. The CLI maps these onto its exit
// codes: config/domain/shape -> 2, I/O -> 3, numeric -> 4.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FileVersionError : IoError {
    using IoError::IoError;
};

struct FileChecksumError : IoError {
    using IoError::IoError;
};

struct FileTruncationError : IoError {
    using IoError::IoError;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace vgos
