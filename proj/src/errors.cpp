#include "tfim/errors.hpp"

namespace tfim {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidModelSize: return "InvalidModelSize";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::ZeroMode: return "ZeroMode";
    case ErrorCode::InvalidRoot: return "InvalidRoot";
    case ErrorCode::PoleAtK: return "PoleAtK";
    case ErrorCode::BranchError: return "BranchError";
    case ErrorCode::IncompleteSpectrum: return "IncompleteSpectrum";
    case ErrorCode::AnsatzSingular: return "AnsatzSingular";
    case ErrorCode::InvalidSitePair: return "InvalidSitePair";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

}  // namespace tfim
