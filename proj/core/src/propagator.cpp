#include "twofield/dynamics.hpp"

#include <cmath>

#include "twofield/hamiltonians.hpp"

namespace twofield {

RabiFrequency rabi_frequency(int n, const DerivedParams& d, Complex epsilon) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "photon number must be >= 0");
  const double detuning = d.chi * n + d.delta_tilde;
  const double omega = std::hypot(detuning, std::abs(epsilon));
  return {omega, omega == 0.0};
}

Matrix2 PropagatorBlock::matrix() const {
  Matrix2 m;
  m << u11, u12, u21, u22;
  return m;
}

PropagatorBlock propagator_block(int n, double t, const SystemParams& p) {
  return propagator_block(n, t, p, derived_params(p));
}

PropagatorBlock propagator_block(int n, double t, const SystemParams& p,
                                 const DerivedParams& d) {
  if (!std::isfinite(t)) throw Error(ErrorKind::InvalidArgument, "time must be finite");
  const RabiFrequency rf = rabi_frequency(n, d, p.epsilon);
  const double detuning = d.chi * n + d.delta_tilde;
  const double c = std::cos(rf.omega * t);
  // sin(Omega t)/Omega, continuous at Omega = 0
  const double s = rf.degenerate ? t : std::sin(rf.omega * t) / rf.omega;

  PropagatorBlock b;
  b.n = n;
  b.omega_n = rf.omega;
  b.u11 = Complex(c, -detuning * s);
  b.u12 = -kI * p.epsilon * s;
  b.u21 = -kI * std::conj(p.epsilon) * s;
  b.u22 = Complex(c, detuning * s);
  return b;
}

JointOperator block_propagator(double t, const SystemParams& p, FockCutoff cutoff) {
  const DerivedParams d = derived_params(p);
  const int dim = cutoff.dim();
  Matrix u = Matrix::Zero(2 * dim, 2 * dim);
  for (int n = 0; n < dim; ++n) {
    const PropagatorBlock b = propagator_block(n, t, p, d);
    const int e = joint_index(AtomLevel::Excited, n, cutoff);
    const int g = joint_index(AtomLevel::Ground, n, cutoff);
    u(e, e) = b.u11;
    u(e, g) = b.u12;
    u(g, e) = b.u21;
    u(g, g) = b.u22;
  }
  return JointOperator(std::move(u), cutoff);
}

JointOperator effective_propagator(double t, const SystemParams& p, FockCutoff cutoff) {
  const JointOperator disp = joint_displacement(derived_params(p).beta, cutoff);
  return disp * block_propagator(t, p, cutoff) * disp.adjoint();
}

}  // namespace twofield
