#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pretop {

/// Every failure the library reports is one of these kinds. The CLI maps
/// kinds onto exit codes, so new kinds must also be classified there.
enum class ErrorKind {
  MalformedInterval,
  AxisMismatch,
  SchemaMismatch,
  UnknownPoint,
  AxiomViolation,
  EmptyKernel,
  EmptySubspace,
  PointSetMismatch,
  SizeLimit,
  InvalidTopology,
  EmptyPreimage,
  NotSurjective,
  NotDense,
  DifferentBase,
  PatternGap,
  PatternOverlap,
  NonMonotoneRule,
  SelfMembershipViolation,
  UnknownBuiltin,
  FragmentEscape,
  WindowTooSmall,
  UnclassifiableImageTrace,
  ParseError,
  ResolutionError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace pretop
