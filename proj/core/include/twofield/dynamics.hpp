#pragma once

// Time evolution under the dispersive effective Hamiltonian and under
// Milburn's intrinsic-decoherence equation
//
//   d rho/dt = gamma ( e^{-iH/gamma} rho e^{iH/gamma} - rho ),
//
// whose exact solution is the Poisson mixture
//
//   rho(t) = sum_m e^{-gamma t} (gamma t)^m / m!  U_1^m rho(0) U_1^{dag m},
//   U_1 = e^{-iH/gamma}.
//
// Two exact routes are provided: the Poisson window sum (cost O(gamma t))
// and the spectral closed form (cost independent of gamma t). The first
// order expansion in 1/gamma is integrated separately for comparison.

#include <cstdint>

#include "twofield/fock.hpp"
#include "twofield/params.hpp"
#include "twofield/poisson.hpp"

namespace twofield {

// --- analytic block propagator ----------------------------------------------

struct RabiFrequency {
  double omega = 0.0;       // Omega_n >= 0
  bool degenerate = false;  // eps = 0 and chi n + delta_tilde = 0
};

/// Omega_n = sqrt((chi n + delta_tilde)^2 + |eps|^2).
RabiFrequency rabi_frequency(int n, const DerivedParams& d, Complex epsilon);

/// exp(-i t [[chi n + delta_tilde, eps], [eps^*, -(chi n + delta_tilde)]]) in
/// the (|e>, |g>) basis.
struct PropagatorBlock {
  int n = 0;
  double omega_n = 0.0;
  Complex u11, u12, u21, u22;

  Matrix2 matrix() const;
};

/// Closed-form block; the Omega -> 0 case uses sin(Omega t)/Omega -> t.
PropagatorBlock propagator_block(int n, double t, const SystemParams& p);
PropagatorBlock propagator_block(int n, double t, const SystemParams& p,
                                 const DerivedParams& d);

/// Block-diagonal assembly of propagator_block over n = 0..dcut-1:
/// exp(-i t effective_core).
JointOperator block_propagator(double t, const SystemParams& p, FockCutoff cutoff);

/// exp(-i t effective_hamiltonian_displaced) = D(beta) B(t) D^dag(beta) with
/// B from block_propagator.
JointOperator effective_propagator(double t, const SystemParams& p, FockCutoff cutoff);

// --- unitary evolution -------------------------------------------------------

/// U rho0 U^dag, U = exp(-iHt). Throws NonHermitian.
JointDensity schrodinger_evolve(const JointDensity& rho0, const JointOperator& h, double t);

// --- Milburn evolution --------------------------------------------------------

struct MilburnConfig {
  double gamma = 1e6;
  double tail_tol = 1e-12;
  std::int64_t max_terms = 100000;

  void validate() const;
};

struct PoissonEvolution {
  JointDensity rho;
  PoissonWindow window;  // retained terms; weights were divided by retained_mass
};

/// Poisson-window sum of the exact solution. Throws WindowBudget when the
/// window would need more than cfg.max_terms terms; use the spectral route
/// for large gamma t.
PoissonEvolution milburn_poisson_evolve(const JointDensity& rho0, const JointOperator& h,
                                        double t, const MilburnConfig& cfg);

/// Spectral closed form of the exact solution. In the eigenbasis of H,
///   rho_jk(t) = rho_jk(0) exp(gamma t (e^{-i(E_j - E_k)/gamma} - 1)).
/// The eigendecomposition is computed once and is read-only afterwards, so
/// a single instance may be shared by concurrent callers.
class SpectralMilburn {
 public:
  SpectralMilburn(const JointOperator& h, double gamma);
  /// Adopt an existing orthonormal eigendecomposition H = V diag(E) V^dag.
  SpectralMilburn(Eigen::VectorXd energies, Matrix eigenvectors, FockCutoff cutoff,
                  double gamma);

  JointDensity evolve(const JointDensity& rho0, double t) const;

  /// V^dag M V.
  Matrix to_energy_basis(const Matrix& m) const;
  /// V M V^dag.
  Matrix from_energy_basis(const Matrix& m) const;
  /// Elementwise damping of an energy-basis density.
  Matrix evolve_energy_basis(const Matrix& rho_energy0, double t) const;

  /// Per-pair factor exp(gamma t (e^{-i omega/gamma} - 1)) for omega = E_j - E_k.
  static Complex damping_factor(double omega, double gamma, double t);

  const Eigen::VectorXd& energies() const noexcept { return energies_; }
  const Matrix& eigenvectors() const noexcept { return vectors_; }
  double gamma() const noexcept { return gamma_; }
  FockCutoff cutoff() const noexcept { return cutoff_; }

 private:
  Eigen::VectorXd energies_;
  Matrix vectors_;
  FockCutoff cutoff_;
  double gamma_;
};

JointDensity milburn_spectral_evolve(const JointDensity& rho0, const JointOperator& h,
                                     double t, double gamma);

/// Fixed-step RK4 integration of the first-order expansion
///   d rho/dt = -i[H, rho] - (1/(2 gamma)) [H, [H, rho]].
/// The step is shrunk so an integer number of steps lands on t. Throws
/// StepSize when the trace drifts by more than 1e-6.
JointDensity lindblad_first_order_evolve(const JointDensity& rho0, const JointOperator& h,
                                         double t, double gamma, double dt);

/// Advisory step 0.01 / ||H||_2.
double lindblad_default_step(const JointOperator& h);

}  // namespace twofield
