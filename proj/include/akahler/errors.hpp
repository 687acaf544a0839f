#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace akahler {

/// Base of every error raised by the library. `kind()` is the stable error
/// class name used in machine-readable CLI output.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what, std::optional<int> line = std::nullopt)
      : std::runtime_error(line ? "line " + std::to_string(*line) + ": " + what : what),
        kind_(std::move(kind)),
        line_(line) {}

  const std::string& kind() const noexcept { return kind_; }
  std::optional<int> line() const noexcept { return line_; }

private:
  std::string kind_;
  std::optional<int> line_;
};

#define AKAHLER_DEFINE_ERROR(Name)                                                     \
  class Name : public Error {                                                          \
  public:                                                                              \
    explicit Name(const std::string& what, std::optional<int> line = std::nullopt)     \
        : Error(#Name, what, line) {}                                                  \
  };

AKAHLER_DEFINE_ERROR(Singular)
AKAHLER_DEFINE_ERROR(NotSymmetric)
AKAHLER_DEFINE_ERROR(DimensionMismatch)
AKAHLER_DEFINE_ERROR(NotComplexStructure)
AKAHLER_DEFINE_ERROR(AntisymmetryViolation)
AKAHLER_DEFINE_ERROR(JacobiViolation)
AKAHLER_DEFINE_ERROR(NotAntiIsometry)
AKAHLER_DEFINE_ERROR(SingularMetric)
AKAHLER_DEFINE_ERROR(BadJSquare)
AKAHLER_DEFINE_ERROR(SyntaxError)
AKAHLER_DEFINE_ERROR(NotAntiKahler)
AKAHLER_DEFINE_ERROR(NormalizationFailed)
AKAHLER_DEFINE_ERROR(DegenerateParameters)
AKAHLER_DEFINE_ERROR(UnknownEntry)
AKAHLER_DEFINE_ERROR(UnknownSuite)
AKAHLER_DEFINE_ERROR(FileError)

#undef AKAHLER_DEFINE_ERROR

}  // namespace akahler
