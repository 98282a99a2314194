#include "uavplan/errors.hpp"

namespace uavplan {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NegativeSpeed: return "NegativeSpeed";
    case ErrorKind::InfeasibleLeg: return "InfeasibleLeg";
    case ErrorKind::DegenerateLeg: return "DegenerateLeg";
    case ErrorKind::NoFly: return "NoFly";
    case ErrorKind::EmptyDataset: return "EmptyDataset";
    case ErrorKind::NoGustData: return "NoGustData";
    case ErrorKind::CapacityInfeasible: return "CapacityInfeasible";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::TurbineUnreachable: return "TurbineUnreachable";
    case ErrorKind::EmptyFile: return "EmptyFile";
    case ErrorKind::AllRowsInvalid: return "AllRowsInvalid";
    case ErrorKind::DuplicateCode: return "DuplicateCode";
    case ErrorKind::LatitudeOutOfRange: return "LatitudeOutOfRange";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InfeasibleLeg:
    case ErrorKind::NoFly:
    case ErrorKind::CapacityInfeasible:
    case ErrorKind::TooLarge:
    case ErrorKind::TurbineUnreachable:
      return 3;
    case ErrorKind::IoError:
      return 4;
    default:
      return 2;
  }
}

}  // namespace uavplan
