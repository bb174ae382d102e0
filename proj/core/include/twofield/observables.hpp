#pragma once

#include <vector>

#include "twofield/dynamics.hpp"
#include "twofield/params.hpp"
#include "twofield/time_series.hpp"

namespace twofield {

/// Atom in (|g> + |e>)/sqrt(2), field in |alpha>.
JointDensity initial_density(const SystemParams& p, FockCutoff cutoff);

struct SigmaXSeriesConfig {
  /// Photon numbers 0..n_max-1 enter the sum; 0 selects p.cutoff.dim().
  int n_max = 0;
};

/// Closed-form atomic polarization for the initial_density() state evolved
/// under Milburn dynamics with the displaced effective Hamiltonian:
///
///   <sigma_x>(t) = sum_n P_n / Omega_n^2 [ eps_r^2
///       + e^{-gamma t (1 - cos(2 Omega_n/gamma))} ((chi n + delta_tilde)^2 + eps_i^2)
///         cos(gamma t sin(2 Omega_n/gamma)) ]
///
/// with P_n the Poisson(|alpha - beta|^2) weights renormalized over the
/// retained terms and eps = eps_r + i eps_i. For real eps the bracket is the
/// familiar eps^2 + e^{...}(chi n + delta_tilde)^2 cos(...).
///
/// Construction precomputes weights and frequencies; evaluation is O(n_max)
/// and thread-safe.
class SigmaXSeries {
 public:
  /// Throws CutoffTooSmall when the Poisson tail beyond n_max is 1e-12 or more.
  explicit SigmaXSeries(const SystemParams& p, const SigmaXSeriesConfig& cfg = {});

  double operator()(double t) const;

  int n_max() const noexcept { return static_cast<int>(weights_.size()); }
  /// Poisson mass dropped before renormalization.
  double discarded_mass() const noexcept { return discarded_; }

 private:
  std::vector<double> weights_;
  std::vector<double> omega_;
  std::vector<double> detuning_;
  double eps_r2_ = 0.0;
  double eps_i2_ = 0.0;
  double gamma_ = 0.0;
  double discarded_ = 0.0;
};

double sigma_x_closed_form(const SystemParams& p, double t, const SigmaXSeriesConfig& cfg = {});

/// Tr(rho sigma_x (x) I); throws NumericalFailure if the imaginary residue
/// exceeds 1e-10.
double sigma_x_from_state(const JointDensity& rho);
/// Tr(rho sigma_z (x) I).
double atomic_inversion(const JointDensity& rho);
/// Tr(rho^2).
double purity(const JointDensity& rho);

struct Window {
  double begin = 0.0;
  double end = 0.0;
};

struct RevivalMetrics {
  double collapse_floor = 0.0;  // max |value| over the collapse window
  double revival_peak = 0.0;    // max |value| over the revival window
  double revival_time = 0.0;    // where revival_peak is attained (first hit)
};

/// Throws InvalidArgument if either window holds no samples.
RevivalMetrics revival_metrics(const TimeSeries& series, Window collapse, Window revival);

/// max |value| over samples with t in [w.begin, w.end].
double window_max_abs(const TimeSeries& series, Window w);

/// Revival period pi/|chi| of the undamped dispersive dynamics.
double revival_period(const DerivedParams& d);

/// Windows used for the figure metrics: collapse [1.5, 2.5] and revival
/// [T - 0.5, T + 0.5] with T = revival_period(), both in units of 1/lambda
/// for chi = -1 and scaled by 1/|chi| otherwise.
Window default_collapse_window(const DerivedParams& d);
Window default_revival_window(const DerivedParams& d);

}  // namespace twofield
