#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bridgemi {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPositiveDefiniteError : Error { using Error::Error; };
struct InsufficientSamplesError : Error { using Error::Error; };
struct SingularTimeError : Error { using Error::Error; };
struct SingularCovarianceError : Error { using Error::Error; };
struct ZeroVarianceError : Error { using Error::Error; };
struct TargetTooSmallError : Error { using Error::Error; };
struct LengthMismatchError : Error { using Error::Error; };
struct InfeasibleTargetError : Error { using Error::Error; };
struct ShapeMismatchError : Error { using Error::Error; };
struct StaleCacheError : Error { using Error::Error; };
struct NonFiniteLossError : Error { using Error::Error; };
struct NonFiniteStateError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct SampleOutsideSupportError : Error { using Error::Error; };
struct TooFewSamplesError : Error { using Error::Error; };
struct NoClosedDensityError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

// Cell location is part of the message ("row R, column C") and kept as fields
// so callers can recover it without string parsing.
struct ParseError : Error {
  std::size_t row = 0;
  std::size_t col = 0;
  ParseError(const std::string& msg, std::size_t r, std::size_t c)
      : Error(msg), row(r), col(c) {}
};

}  // namespace bridgemi
