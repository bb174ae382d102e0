#include <cmath>

#include <Eigen/SVD>

#include "twofield/dynamics.hpp"

#include "detail.hpp"

namespace twofield {

namespace detail {

void require_hermitian(const JointOperator& h) {
  const double scale = std::max(1.0, h.matrix().cwiseAbs().maxCoeff());
  if (hermiticity_defect(h.matrix()) > 1e-10 * scale) {
    throw Error(ErrorKind::NonHermitian, "Hamiltonian is not Hermitian");
  }
}

void require_same_cutoff(const JointDensity& rho, const JointOperator& h) {
  if (!(rho.cutoff() == h.cutoff())) {
    throw Error(ErrorKind::DimensionMismatch, "state and Hamiltonian use different cutoffs");
  }
}

JointDensity symmetrized(const Matrix& m, FockCutoff cutoff) {
  return JointDensity(0.5 * (m + m.adjoint()), cutoff);
}

}  // namespace detail

JointDensity schrodinger_evolve(const JointDensity& rho0, const JointOperator& h, double t) {
  detail::require_same_cutoff(rho0, h);
  detail::require_hermitian(h);
  if (!std::isfinite(t)) throw Error(ErrorKind::InvalidArgument, "time must be finite");
  if (t == 0.0) return rho0;
  const Matrix u = matrix_exponential(Matrix(Complex(0.0, -t) * h.matrix()));
  return detail::symmetrized(u * rho0.matrix() * u.adjoint(), rho0.cutoff());
}

double lindblad_default_step(const JointOperator& h) {
  Eigen::JacobiSVD<Matrix> svd(h.matrix());
  const double norm = svd.singularValues()(0);
  return norm > 0.0 ? 0.01 / norm : 0.01;
}

JointDensity lindblad_first_order_evolve(const JointDensity& rho0, const JointOperator& h,
                                         double t, double gamma, double dt) {
  detail::require_same_cutoff(rho0, h);
  detail::require_hermitian(h);
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw Error(ErrorKind::InvalidArgument, "gamma must be finite and positive");
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw Error(ErrorKind::InvalidArgument, "step size must be positive");
  }
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw Error(ErrorKind::InvalidArgument, "time must be finite and >= 0");
  }
  if (t == 0.0) return rho0;

  const auto steps = static_cast<long>(std::ceil(t / dt));
  const double step = t / static_cast<double>(steps);
  const Matrix& hm = h.matrix();
  const double damping = 0.5 / gamma;

  auto rhs = [&](const Matrix& rho) -> Matrix {
    const Matrix comm = hm * rho - rho * hm;
    return Complex(0.0, -1.0) * comm - damping * (hm * comm - comm * hm);
  };

  const Complex trace0 = rho0.matrix().trace();
  Matrix rho = rho0.matrix();
  for (long k = 0; k < steps; ++k) {
    const Matrix k1 = rhs(rho);
    const Matrix k2 = rhs(rho + 0.5 * step * k1);
    const Matrix k3 = rhs(rho + 0.5 * step * k2);
    const Matrix k4 = rhs(rho + step * k3);
    rho += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = 0.5 * (rho + rho.adjoint()).eval();

    if (!rho.allFinite() || std::abs(rho.trace() - trace0) > 1e-6) {
      throw Error(ErrorKind::StepSize,
                  "first-order integrator lost trace at step " + std::to_string(k) +
                      "; reduce dt (advisory dt <= 0.01/||H||)");
    }
  }
  return JointDensity(std::move(rho), rho0.cutoff());
}

}  // namespace twofield
