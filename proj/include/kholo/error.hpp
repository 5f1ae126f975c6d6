#ifndef KHOLO_ERROR_HPP
#define KHOLO_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace kholo {

/// Failure categories raised by the toolkit. Each maps onto one of the
/// named error conditions of the public operations.
enum class ErrorKind {
  DivisionByZero,
  SpaceMismatch,
  UnknownVariable,
  IncompleteSubstitution,
  IncompleteAssignment,
  NonZSpace,
  IndexOutOfRange,
  DegreeOverflow,
  NonRealCoefficients,
  ZeroInput,
  DegreeZeroBoth,
  BasepointNotFound,
  ZeroDegree,
  InexactDivision,
  LeadingCoefficientVanishes,
  NonConvergence,
  PointOnLocus,
  InvalidComplex,
  InvalidEndpoints,
  Disconnected,
  SyntaxError,
  NegativeExponent,
  InvalidDocument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for conditions that indicate a defect in this library rather than
  /// bad user input.
  bool is_internal() const noexcept {
    return kind_ == ErrorKind::InexactDivision || kind_ == ErrorKind::NonConvergence;
  }

 private:
  ErrorKind kind_;
};

}  // namespace kholo

#endif  // KHOLO_ERROR_HPP
