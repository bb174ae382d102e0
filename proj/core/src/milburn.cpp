#include <cmath>

#include <Eigen/Eigenvalues>

#include "detail.hpp"
#include "twofield/dynamics.hpp"

namespace twofield {

void MilburnConfig::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw Error(ErrorKind::InvalidArgument, "gamma must be finite and positive");
  }
  if (!(tail_tol > 0.0 && tail_tol < 1e-6)) {
    throw Error(ErrorKind::InvalidArgument, "tail_tol must lie in (0, 1e-6)");
  }
  if (max_terms < 1) {
    throw Error(ErrorKind::InvalidArgument, "max_terms must be positive");
  }
}

PoissonEvolution milburn_poisson_evolve(const JointDensity& rho0, const JointOperator& h,
                                        double t, const MilburnConfig& cfg) {
  cfg.validate();
  detail::require_same_cutoff(rho0, h);
  detail::require_hermitian(h);
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw Error(ErrorKind::InvalidArgument, "time must be finite and >= 0");
  }

  const double mean = cfg.gamma * t;
  // Reject before touching the Poisson tails: the narrowest window tried
  // is mean -+ 8 sqrt(mean + 1).
  const double min_width = 16.0 * std::sqrt(mean + 1.0) + 1.0;
  if (min_width > static_cast<double>(cfg.max_terms)) {
    throw Error(ErrorKind::WindowBudget,
                "gamma t = " + std::to_string(mean) + " needs more than max_terms = " +
                    std::to_string(cfg.max_terms) +
                    " Poisson terms; use the spectral route");
  }
  const PoissonWindow window = poisson_window(mean, cfg.tail_tol);
  if (window.size() > cfg.max_terms) {
    throw Error(ErrorKind::WindowBudget,
                "Poisson window of " + std::to_string(window.size()) +
                    " terms exceeds max_terms; use the spectral route");
  }
  if (window.first == 0 && window.last == 0) return {rho0, window};

  const Matrix step_generator = Complex(0.0, -1.0 / cfg.gamma) * h.matrix();
  const Matrix u1 = matrix_exponential(step_generator);
  const Matrix u1_dag = u1.adjoint();

  Matrix rho_m = rho0.matrix();
  if (window.first > 0) {
    const Matrix u_first =
        matrix_exponential(Matrix(static_cast<double>(window.first) * step_generator));
    rho_m = u_first * rho_m * u_first.adjoint();
  }

  Matrix sum = Matrix::Zero(rho0.dim(), rho0.dim());
  double weight_sum = 0.0;
  for (std::int64_t m = window.first; m <= window.last; ++m) {
    const double w = poisson_pmf(mean, m);
    sum += w * rho_m;
    weight_sum += w;
    if (m < window.last) rho_m = u1 * rho_m * u1_dag;
  }
  sum /= weight_sum;
  return {detail::symmetrized(sum, rho0.cutoff()), window};
}

SpectralMilburn::SpectralMilburn(const JointOperator& h, double gamma)
    : cutoff_(h.cutoff()), gamma_(gamma) {
  if (!(gamma > 0.0)) throw Error(ErrorKind::InvalidArgument, "gamma must be positive");
  detail::require_hermitian(h);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NumericalFailure, "eigensolver did not converge");
  }
  energies_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
}

SpectralMilburn::SpectralMilburn(Eigen::VectorXd energies, Matrix eigenvectors,
                                 FockCutoff cutoff, double gamma)
    : energies_(std::move(energies)),
      vectors_(std::move(eigenvectors)),
      cutoff_(cutoff),
      gamma_(gamma) {
  if (!(gamma > 0.0)) throw Error(ErrorKind::InvalidArgument, "gamma must be positive");
  const int d = cutoff.joint_dim();
  if (energies_.size() != d || vectors_.rows() != d || vectors_.cols() != d) {
    throw Error(ErrorKind::DimensionMismatch, "eigendecomposition size differs from 2*dcut");
  }
}

Complex SpectralMilburn::damping_factor(double omega, double gamma, double t) {
  // gamma t (cos(w/gamma) - 1) written without cancellation
  const double half = std::sin(0.5 * omega / gamma);
  const double decay = -2.0 * gamma * t * half * half;
  const double phase = -gamma * t * std::sin(omega / gamma);
  return std::exp(decay) * Complex(std::cos(phase), std::sin(phase));
}

Matrix SpectralMilburn::to_energy_basis(const Matrix& m) const {
  return vectors_.adjoint() * m * vectors_;
}

Matrix SpectralMilburn::from_energy_basis(const Matrix& m) const {
  return vectors_ * m * vectors_.adjoint();
}

Matrix SpectralMilburn::evolve_energy_basis(const Matrix& rho_energy0, double t) const {
  const Eigen::Index d = energies_.size();
  Matrix out(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index j = 0; j < d; ++j) {
      out(j, k) = rho_energy0(j, k) * damping_factor(energies_(j) - energies_(k), gamma_, t);
    }
  }
  return out;
}

JointDensity SpectralMilburn::evolve(const JointDensity& rho0, double t) const {
  if (!(rho0.cutoff() == cutoff_)) {
    throw Error(ErrorKind::DimensionMismatch, "state and Hamiltonian use different cutoffs");
  }
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw Error(ErrorKind::InvalidArgument, "time must be finite and >= 0");
  }
  if (t == 0.0) return rho0;
  const Matrix rho_t = from_energy_basis(evolve_energy_basis(to_energy_basis(rho0.matrix()), t));
  return detail::symmetrized(rho_t, cutoff_);
}

JointDensity milburn_spectral_evolve(const JointDensity& rho0, const JointOperator& h,
                                     double t, double gamma) {
  detail::require_same_cutoff(rho0, h);
  return SpectralMilburn(h, gamma).evolve(rho0, t);
}

}  // namespace twofield
