#pragma once

#include <stdexcept>
#include <string>

namespace uavplan {

enum class ErrorKind {
  NegativeSpeed,
  InfeasibleLeg,
  DegenerateLeg,
  NoFly,
  EmptyDataset,
  NoGustData,
  CapacityInfeasible,
  ValidationFailed,
  TooLarge,
  TurbineUnreachable,
  EmptyFile,
  AllRowsInvalid,
  DuplicateCode,
  LatitudeOutOfRange,
  InvalidInput,
  IoError,
};

const char* to_string(ErrorKind kind);

// Process exit code used by the CLI: 2 validation, 3 infeasible, 4 I/O.
int exit_code(ErrorKind kind);

class PlanError : public std::runtime_error {
 public:
  PlanError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace uavplan
