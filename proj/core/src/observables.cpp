#include "twofield/observables.hpp"

#include <cmath>
#include <numbers>

#include "twofield/poisson.hpp"

namespace twofield {

namespace {

constexpr double kSeriesTailTolerance = 1e-12;
constexpr double kImaginaryResidue = 1e-10;

double real_expectation(const JointDensity& rho, const AtomOperator& atom) {
  const Complex v = expectation(rho, atom_only(atom, rho.cutoff()));
  if (std::abs(v.imag()) > kImaginaryResidue) {
    throw Error(ErrorKind::NumericalFailure, "Hermitian expectation has imaginary part");
  }
  return v.real();
}

}  // namespace

JointDensity initial_density(const SystemParams& p, FockCutoff cutoff) {
  Matrix2 atom;
  atom << 0.5, 0.5, 0.5, 0.5;
  return JointDensity::product(atom, coherent_state(p.alpha, cutoff));
}

SigmaXSeries::SigmaXSeries(const SystemParams& p, const SigmaXSeriesConfig& cfg)
    : eps_r2_(p.epsilon.real() * p.epsilon.real()),
      eps_i2_(p.epsilon.imag() * p.epsilon.imag()),
      gamma_(p.gamma) {
  const DerivedParams d = derived_params(p);
  const int n_max = cfg.n_max > 0 ? cfg.n_max : p.cutoff.dim();
  const double mean = std::norm(p.alpha - d.beta);

  discarded_ = poisson_tail_mass(mean, n_max);
  if (!(discarded_ < kSeriesTailTolerance)) {
    throw Error(ErrorKind::CutoffTooSmall,
                "sigma_x series: Poisson(|alpha - beta|^2) tail " + std::to_string(discarded_) +
                    " beyond n_max = " + std::to_string(n_max));
  }

  weights_.resize(static_cast<std::size_t>(n_max));
  omega_.resize(weights_.size());
  detuning_.resize(weights_.size());
  double total = 0.0;
  for (int n = 0; n < n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    weights_[i] = poisson_pmf(mean, n);
    total += weights_[i];
    detuning_[i] = d.chi * n + d.delta_tilde;
    omega_[i] = rabi_frequency(n, d, p.epsilon).omega;
  }
  for (double& w : weights_) w /= total;
}

double SigmaXSeries::operator()(double t) const {
  double sum = 0.0;
  for (std::size_t n = 0; n < weights_.size(); ++n) {
    const double omega = omega_[n];
    if (omega == 0.0) {
      // Null block: the atomic state is frozen.
      sum += weights_[n];
      continue;
    }
    const double half = std::sin(omega / gamma_);
    const double envelope = std::exp(-2.0 * gamma_ * t * half * half);
    const double phase = gamma_ * t * std::sin(2.0 * omega / gamma_);
    const double coherent = detuning_[n] * detuning_[n] + eps_i2_;
    sum += weights_[n] * (eps_r2_ + envelope * coherent * std::cos(phase)) / (omega * omega);
  }
  return sum;
}

double sigma_x_closed_form(const SystemParams& p, double t, const SigmaXSeriesConfig& cfg) {
  return SigmaXSeries(p, cfg)(t);
}

double sigma_x_from_state(const JointDensity& rho) {
  return real_expectation(rho, AtomOperator::sigma_x());
}

double atomic_inversion(const JointDensity& rho) {
  return real_expectation(rho, AtomOperator::sigma_z());
}

double purity(const JointDensity& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
  return rho.matrix().squaredNorm();
}

double window_max_abs(const TimeSeries& series, Window w) {
  bool any = false;
  double best = 0.0;
  for (const Sample& s : series) {
    if (s.t < w.begin || s.t > w.end) continue;
    any = true;
    best = std::max(best, std::abs(s.value));
  }
  if (!any) throw Error(ErrorKind::InvalidArgument, "window contains no samples");
  return best;
}

RevivalMetrics revival_metrics(const TimeSeries& series, Window collapse, Window revival) {
  RevivalMetrics m;
  m.collapse_floor = window_max_abs(series, collapse);

  bool any = false;
  for (const Sample& s : series) {
    if (s.t < revival.begin || s.t > revival.end) continue;
    if (!any || std::abs(s.value) > m.revival_peak) {
      m.revival_peak = std::abs(s.value);
      m.revival_time = s.t;
    }
    any = true;
  }
  if (!any) throw Error(ErrorKind::InvalidArgument, "revival window contains no samples");
  return m;
}

double revival_period(const DerivedParams& d) { return std::numbers::pi / std::abs(d.chi); }

Window default_collapse_window(const DerivedParams& d) {
  const double scale = 1.0 / std::abs(d.chi);
  return {1.5 * scale, 2.5 * scale};
}

Window default_revival_window(const DerivedParams& d) {
  const double period = revival_period(d);
  const double half_width = 0.5 / std::abs(d.chi);
  return {period - half_width, period + half_width};
}

}  // namespace twofield
