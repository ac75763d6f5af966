#pragma once

#include <stdexcept>
#include <string>

namespace qws {

// Common base so callers can catch every library error with one handler.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidPartition : Error { using Error::Error; };
struct InvalidMarkedCount : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct DimensionTooLarge : Error { using Error::Error; };
struct SubspaceLeak : Error { using Error::Error; };
struct InvalidQubitIndex : Error { using Error::Error; };
struct NotTwoQubit : Error { using Error::Error; };
struct TooManyQubits : Error { using Error::Error; };
struct EncodingMismatch : Error { using Error::Error; };
struct CsvFormatError : Error { using Error::Error; };

}  // namespace qws
