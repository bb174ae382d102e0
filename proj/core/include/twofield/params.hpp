#pragma once

#include <optional>
#include <string>

#include "twofield/types.hpp"

namespace twofield {

/// Physical inputs. Rates are in units of the coupling lambda, hbar = 1.
/// The field and atomic frequencies only enter through the detuning
/// delta = omega_0 - omega.
struct SystemParams {
  double lambda = 1.0;        // atom / quantized-field coupling
  Complex epsilon{0.0, 0.0};  // classical-field amplitude
  double delta = 2.0;         // detuning omega_0 - omega
  double gamma = 1e6;         // intrinsic-decoherence rate
  Complex alpha{2.5, 0.0};    // initial coherent amplitude
  FockCutoff cutoff{};

  /// Throws InvalidArgument / SingularDetuning / SingularChi.
  void validate() const;
  /// Finiteness and sign checks only; lambda = 0 and delta = 0 pass.
  void validate_finite() const;
};

/// Parameters of the dispersive effective Hamiltonian.
struct DerivedParams {
  double eta = 0.0;          // small-rotation angle, -lambda/delta
  double chi = 0.0;          // dispersive rate, -2 lambda^2/delta
  double beta = 0.0;         // displacement amplitude, eta/chi
  double delta_tilde = 0.0;  // shifted detuning, delta - |epsilon|^2/chi
};

DerivedParams derived_params(const SystemParams& p);

/// Dispersive-validity threshold: |delta| >= 5 lambda.
inline constexpr double kDispersiveRatio = 5.0;

/// Message when |delta| < 5 lambda, empty otherwise. Evaluation proceeds
/// either way.
std::optional<std::string> dispersive_validity_warning(const SystemParams& p);

/// The three parameter sets of the collapse/revival figure: alpha = 2.5,
/// lambda = 1, delta = 2 and (epsilon, gamma) = (0, 1e6), (0.5, 1e3),
/// (0.5, 1e6).
SystemParams figure_params(char panel);

}  // namespace twofield
