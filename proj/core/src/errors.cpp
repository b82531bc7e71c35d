#include "pretop/errors.hpp"

namespace pretop {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedInterval: return "MalformedInterval";
    case ErrorKind::AxisMismatch: return "AxisMismatch";
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::EmptyKernel: return "EmptyKernel";
    case ErrorKind::EmptySubspace: return "EmptySubspace";
    case ErrorKind::PointSetMismatch: return "PointSetMismatch";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::InvalidTopology: return "InvalidTopology";
    case ErrorKind::EmptyPreimage: return "EmptyPreimage";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::NotDense: return "NotDense";
    case ErrorKind::DifferentBase: return "DifferentBase";
    case ErrorKind::PatternGap: return "PatternGap";
    case ErrorKind::PatternOverlap: return "PatternOverlap";
    case ErrorKind::NonMonotoneRule: return "NonMonotoneRule";
    case ErrorKind::SelfMembershipViolation: return "SelfMembershipViolation";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::FragmentEscape: return "FragmentEscape";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::UnclassifiableImageTrace: return "UnclassifiableImageTrace";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ResolutionError: return "ResolutionError";
  }
  return "Unknown";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace pretop
