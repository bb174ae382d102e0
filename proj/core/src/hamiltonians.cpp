#include "twofield/hamiltonians.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace twofield {

namespace {

using A = AtomOperator;

JointOperator commutator(const JointOperator& x, const JointOperator& y) {
  return x * y - y * x;
}

}  // namespace

JointOperator interaction_hamiltonian(const SystemParams& p, FockCutoff cutoff) {
  p.validate_finite();
  const FieldOperator a = annihilation(cutoff);
  const FieldOperator ad = creation(cutoff);

  JointOperator h = Complex(0.5 * p.delta) * atom_only(A::sigma_z(), cutoff);
  h += Complex(p.lambda) * (atom_field(A::sigma_minus(), ad) + atom_field(A::sigma_plus(), a));
  h += p.epsilon * atom_only(A::sigma_plus(), cutoff);
  h += std::conj(p.epsilon) * atom_only(A::sigma_minus(), cutoff);
  return h;
}

JointOperator effective_hamiltonian(const SystemParams& p, FockCutoff cutoff) {
  p.validate();
  const FieldOperator a = annihilation(cutoff);
  const FieldOperator ad = creation(cutoff);
  const FieldOperator n = number(cutoff);
  const FieldOperator id = FieldOperator::identity(cutoff);

  const double shift = 2.0 * p.lambda * p.lambda / p.delta;
  const double drive = 2.0 * p.lambda / p.delta;
  FieldOperator bracket = Complex(shift) * (Complex(2.0) * n + id);
  bracket += Complex(drive) * (p.epsilon * ad + std::conj(p.epsilon) * a);
  bracket += Complex(0.5 * p.delta) * id;

  JointOperator h = atom_field(A::sigma_z(), bracket);
  h += p.epsilon * atom_only(A::sigma_plus(), cutoff);
  h += std::conj(p.epsilon) * atom_only(A::sigma_minus(), cutoff);
  return h;
}

JointOperator effective_core(const SystemParams& p, FockCutoff cutoff) {
  const DerivedParams d = derived_params(p);
  const FieldOperator bracket =
      Complex(d.chi) * number(cutoff) + Complex(d.delta_tilde) * FieldOperator::identity(cutoff);

  JointOperator h = atom_field(A::sigma_z(), bracket);
  h += p.epsilon * atom_only(A::sigma_plus(), cutoff);
  h += std::conj(p.epsilon) * atom_only(A::sigma_minus(), cutoff);
  return h;
}

JointOperator joint_displacement(Complex beta, FockCutoff cutoff) {
  return atom_field(A::identity(), displacement(beta, cutoff));
}

JointOperator effective_hamiltonian_displaced(const SystemParams& p, FockCutoff cutoff) {
  return effective_hamiltonian_displaced(p, cutoff, derived_params(p).beta);
}

JointOperator effective_hamiltonian_displaced(const SystemParams& p, FockCutoff cutoff,
                                              Complex beta) {
  const JointOperator core = effective_core(p, cutoff);
  const JointOperator d = joint_displacement(beta, cutoff);
  return d * core * d.adjoint();
}

JointOperator rotation_generator(FockCutoff cutoff) {
  return atom_field(A::sigma_minus(), creation(cutoff)) -
         atom_field(A::sigma_plus(), annihilation(cutoff));
}

JointOperator small_rotation_exact(const JointOperator& a, double eta) {
  if (!std::isfinite(eta)) {
    throw Error(ErrorKind::InvalidArgument, "rotation angle must be finite");
  }
  if (eta == 0.0) return a;
  const JointOperator r =
      matrix_exponential(Complex(eta) * rotation_generator(a.cutoff()));
  return r * a * r.adjoint();
}

JointOperator small_rotation_first_order(const JointOperator& a, double eta) {
  if (!std::isfinite(eta)) {
    throw Error(ErrorKind::InvalidArgument, "rotation angle must be finite");
  }
  return a + Complex(eta) * commutator(rotation_generator(a.cutoff()), a);
}

double compare_operators(const JointOperator& a, const JointOperator& b, int subblock) {
  if (!(a.cutoff() == b.cutoff())) {
    throw Error(ErrorKind::DimensionMismatch, "operators use different cutoffs");
  }
  return max_abs_difference(photon_subblock(a.matrix(), a.cutoff(), subblock),
                            photon_subblock(b.matrix(), b.cutoff(), subblock));
}

double operator_norm_gap(const JointOperator& a, const JointOperator& b, int subblock) {
  if (!(a.cutoff() == b.cutoff())) {
    throw Error(ErrorKind::DimensionMismatch, "operators use different cutoffs");
  }
  const Matrix diff = photon_subblock(a.matrix() - b.matrix(), a.cutoff(), subblock);
  Eigen::JacobiSVD<Matrix> svd(diff);
  return svd.singularValues()(0);
}

}  // namespace twofield
