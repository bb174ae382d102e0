#pragma once

#include <stdexcept>
#include <string>

namespace twofield {

enum class ErrorKind {
  InvalidArgument,
  DimensionMismatch,
  SingularDetuning,
  SingularChi,
  TruncationRisk,   // displacement would push weight past the Fock cutoff
  CutoffTooSmall,   // Poisson tail beyond the cutoff exceeds tolerance
  WindowBudget,     // Poisson-sum window exceeds max_terms
  StepSize,         // integrator trace drift
  NonHermitian,
  NumericalFailure,
};

const char* to_string(ErrorKind kind);

/// Single exception type thrown by the library; `kind()` distinguishes
/// configuration errors from numerical guard violations.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for guard violations (cutoff, window, step size) as opposed to
  /// malformed input.
  bool is_numerical_guard() const noexcept {
    return kind_ == ErrorKind::TruncationRisk ||
           kind_ == ErrorKind::CutoffTooSmall ||
           kind_ == ErrorKind::WindowBudget || kind_ == ErrorKind::StepSize;
  }

 private:
  ErrorKind kind_;
};

}  // namespace twofield
