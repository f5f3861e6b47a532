#include "antikit/errors.hpp"

namespace antikit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::OverlappingPartition: return "overlapping partition";
    case ErrorKind::UnknownVertex: return "unknown vertex";
    case ErrorKind::UnknownElement: return "unknown element";
    case ErrorKind::IllegalEdge: return "illegal edge";
    case ErrorKind::DuplicateEdge: return "duplicate edge";
    case ErrorKind::NotFeasible: return "not feasible";
    case ErrorKind::NotIndependentVertex: return "not an independent vertex";
    case ErrorKind::GroundSetTooLarge: return "ground set too large";
    case ErrorKind::NormalizationRequired: return "normalization required";
    case ErrorKind::MissingWeight: return "missing weight";
    case ErrorKind::ForcedNotClosed: return "forced set not closed";
    case ErrorKind::InvalidStructure: return "invalid structure";
    case ErrorKind::InvalidDelta: return "invalid delta";
    case ErrorKind::NotAnAntimatroid: return "not an antimatroid";
    case ErrorKind::FullPowerSet: return "full power set";
    case ErrorKind::NotSplitShelling: return "not a split shelling antimatroid";
  }
  return "error";
}

bool is_domain_refusal(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotFeasible:
    case ErrorKind::NormalizationRequired:
    case ErrorKind::NotAnAntimatroid:
    case ErrorKind::FullPowerSet:
    case ErrorKind::NotSplitShelling:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace antikit
