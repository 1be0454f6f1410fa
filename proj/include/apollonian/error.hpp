#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace apollonian {

enum class ErrorKind {
  ZeroRadius,
  ZeroCurvature,
  NotUnitSpacelike,
  NotTangent,
  NotExactSquare,
  NotPythagorean,
  NegativeDiscriminant,
  InvalidRoot,
  InvalidBound,
  UnknownPreset,
  ReflectionInvariant,
  CurlViolation,
  DivViolation,
  NoMatchingDisk,
  NotAConfiguration,
  NoClosedChain,
  UnknownDisk,
  EmptyPacking,
  DegenerateViewport,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind; the
/// CLI maps it onto the JSON error object written to stderr.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace apollonian
