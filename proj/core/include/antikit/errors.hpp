#pragma once

#include <stdexcept>
#include <string>

namespace antikit {

enum class ErrorKind {
  Parse,
  OverlappingPartition,
  UnknownVertex,
  UnknownElement,
  IllegalEdge,
  DuplicateEdge,
  NotFeasible,
  NotIndependentVertex,
  GroundSetTooLarge,
  NormalizationRequired,
  MissingWeight,
  ForcedNotClosed,
  InvalidStructure,
  InvalidDelta,
  NotAnAntimatroid,
  FullPowerSet,
  NotSplitShelling,
};

const char* to_string(ErrorKind kind);

/// Refusals about well-formed inputs (e.g. asking for the shelling of an
/// infeasible set) are distinguished from malformed input; the CLI maps the
/// former to exit code 1 and the latter to exit code 2.
bool is_domain_refusal(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace antikit
