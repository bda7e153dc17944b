#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tfim {

enum class ErrorCode {
  InvalidModelSize,
  InvalidParameter,
  NotSymmetric,
  ConvergenceFailure,
  ZeroMode,
  InvalidRoot,
  PoleAtK,
  BranchError,
  IncompleteSpectrum,
  AnsatzSingular,
  InvalidSitePair,
  TooLarge,
};

std::string_view to_string(ErrorCode code);

/// All library failures are reported through this exception; `code()` names the
/// failure class so callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tfim
