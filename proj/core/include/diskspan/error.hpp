#pragma once

#include <stdexcept>
#include <string>

namespace diskspan {

enum class ErrorCode {
  DuplicatePoint,
  InvalidRadius,
  InvalidEpsilon,
  DegenerateDirection,
  EqualKeys,
  QuantizationCollision,
  NotUnitInstance,
  NotNormalized,
  InvalidShift,
  NotFarEdge,
  EmptySet,
  DegenerateAxis,
  SeparatorInvariantViolation,
  InductionOrderViolation,
  DisconnectedGraph,
  OracleTooLarge,
  NotSubgraph,
  Parse,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace diskspan
