#include "twofield/fock.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "twofield/poisson.hpp"

namespace twofield {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::SingularDetuning: return "singular detuning";
    case ErrorKind::SingularChi: return "singular chi";
    case ErrorKind::TruncationRisk: return "truncation risk";
    case ErrorKind::CutoffTooSmall: return "cutoff too small";
    case ErrorKind::WindowBudget: return "window budget exceeded";
    case ErrorKind::StepSize: return "step size";
    case ErrorKind::NonHermitian: return "non-Hermitian operator";
    case ErrorKind::NumericalFailure: return "numerical failure";
  }
  return "unknown";
}

namespace {

constexpr double kCoherentTailTolerance = 1e-12;

Matrix2 make2(Complex a, Complex b, Complex c, Complex d) {
  Matrix2 m;
  m << a, b, c, d;
  return m;
}

}  // namespace

AtomOperator AtomOperator::sigma_z() { return AtomOperator(make2(1.0, 0.0, 0.0, -1.0)); }
AtomOperator AtomOperator::sigma_plus() { return AtomOperator(make2(0.0, 1.0, 0.0, 0.0)); }
AtomOperator AtomOperator::sigma_minus() { return AtomOperator(make2(0.0, 0.0, 1.0, 0.0)); }
AtomOperator AtomOperator::sigma_x() { return AtomOperator(make2(0.0, 1.0, 1.0, 0.0)); }
AtomOperator AtomOperator::sigma_y() { return AtomOperator(make2(0.0, -kI, kI, 0.0)); }

FieldState::FieldState(Vector amplitudes, FockCutoff cutoff)
    : amplitudes_(std::move(amplitudes)), cutoff_(cutoff) {
  if (amplitudes_.size() != cutoff_.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "field state length must equal dcut");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-10) {
    throw Error(ErrorKind::InvalidArgument, "field state is not normalized");
  }
}

StateVector::StateVector(Vector amplitudes, FockCutoff cutoff)
    : amplitudes_(std::move(amplitudes)), cutoff_(cutoff) {
  if (amplitudes_.size() != cutoff_.joint_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "joint state length must equal 2*dcut");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-10) {
    throw Error(ErrorKind::InvalidArgument, "joint state is not normalized");
  }
}

JointDensity::JointDensity(Matrix entries, FockCutoff cutoff)
    : entries_(std::move(entries)), cutoff_(cutoff) {
  const int d = cutoff_.joint_dim();
  if (entries_.rows() != d || entries_.cols() != d) {
    throw Error(ErrorKind::DimensionMismatch, "density matrix must be 2*dcut square");
  }
  if (!entries_.allFinite()) {
    throw Error(ErrorKind::NumericalFailure, "density matrix has non-finite entries");
  }
  if (hermiticity_defect(entries_) > kTolerance) {
    throw Error(ErrorKind::NonHermitian, "density matrix is not Hermitian");
  }
  if (std::abs(entries_.trace() - Complex(1.0)) > kTolerance) {
    throw Error(ErrorKind::InvalidArgument, "density matrix trace differs from 1");
  }
}

JointDensity JointDensity::pure(const StateVector& psi) {
  const Vector& v = psi.amplitudes();
  return JointDensity(v * v.adjoint(), psi.cutoff());
}

JointDensity JointDensity::product(const Matrix2& atom_density,
                                   const FieldState& field) {
  const Vector& f = field.amplitudes();
  const Matrix field_density = f * f.adjoint();
  return JointDensity(Eigen::kroneckerProduct(atom_density, field_density).eval(),
                      field.cutoff());
}

double JointDensity::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::NumericalFailure, "eigensolver failed on density matrix");
  }
  return solver.eigenvalues().minCoeff();
}

FieldOperator annihilation(FockCutoff cutoff) {
  const int d = cutoff.dim();
  Matrix a = Matrix::Zero(d, d);
  for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return FieldOperator(std::move(a), cutoff);
}

FieldOperator creation(FockCutoff cutoff) { return annihilation(cutoff).adjoint(); }

FieldOperator number(FockCutoff cutoff) {
  const int d = cutoff.dim();
  Matrix n = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) n(k, k) = static_cast<double>(k);
  return FieldOperator(std::move(n), cutoff);
}

bool displacement_fits(Complex beta, FockCutoff cutoff) {
  const double r = std::abs(beta);
  return std::isfinite(r) && r * r + 6.0 * r < static_cast<double>(cutoff.dim());
}

FieldOperator displacement(Complex beta, FockCutoff cutoff) {
  if (!std::isfinite(beta.real()) || !std::isfinite(beta.imag())) {
    throw Error(ErrorKind::InvalidArgument, "displacement amplitude is not finite");
  }
  if (!displacement_fits(beta, cutoff)) {
    throw Error(ErrorKind::TruncationRisk,
                "displacement |beta|^2 + 6|beta| must stay below dcut = " +
                    std::to_string(cutoff.dim()));
  }
  if (beta == Complex(0.0)) return FieldOperator::identity(cutoff);
  const Matrix a = annihilation(cutoff).matrix();
  const Matrix generator = beta * a.adjoint() - std::conj(beta) * a;
  return FieldOperator(matrix_exponential(generator), cutoff);
}

double coherent_state_weight(Complex alpha, FockCutoff cutoff) {
  return 1.0 - poisson_tail_mass(std::norm(alpha), cutoff.dim());
}

FieldState coherent_state(Complex alpha, FockCutoff cutoff) {
  const double mean = std::norm(alpha);
  const double tail = poisson_tail_mass(mean, cutoff.dim());
  if (!(tail < kCoherentTailTolerance)) {
    throw Error(ErrorKind::CutoffTooSmall,
                "coherent state |alpha|^2 = " + std::to_string(mean) +
                    " loses Poisson mass " + std::to_string(tail) +
                    " beyond dcut = " + std::to_string(cutoff.dim()));
  }
  const int d = cutoff.dim();
  Vector amps(d);
  amps(0) = std::exp(-0.5 * mean);
  for (int n = 1; n < d; ++n) {
    amps(n) = amps(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  }
  amps /= amps.norm();
  return FieldState(std::move(amps), cutoff);
}

JointOperator atom_field(const AtomOperator& atom, const FieldOperator& field) {
  return JointOperator(
      Eigen::kroneckerProduct(Matrix(atom.matrix()), field.matrix()).eval(),
      field.cutoff());
}

JointOperator atom_only(const AtomOperator& atom, FockCutoff cutoff) {
  return atom_field(atom, FieldOperator::identity(cutoff));
}

StateVector product_state(const Eigen::Vector2cd& atom, const FieldState& field) {
  Vector joint = Eigen::kroneckerProduct(Vector(atom), field.amplitudes()).eval();
  return StateVector(std::move(joint), field.cutoff());
}

Matrix matrix_exponential(const Matrix& m) {
  if (!m.allFinite()) {
    throw Error(ErrorKind::InvalidArgument, "matrix exponential of non-finite input");
  }
  Matrix result = m.exp();
  if (!result.allFinite()) {
    throw Error(ErrorKind::NumericalFailure, "matrix exponential overflowed");
  }
  return result;
}

FieldOperator matrix_exponential(const FieldOperator& m) {
  return FieldOperator(matrix_exponential(m.matrix()), m.cutoff());
}

JointOperator matrix_exponential(const JointOperator& m) {
  return JointOperator(matrix_exponential(m.matrix()), m.cutoff());
}

Complex expectation(const JointDensity& rho, const JointOperator& op) {
  if (!(rho.cutoff() == op.cutoff())) {
    throw Error(ErrorKind::DimensionMismatch, "state and operator use different cutoffs");
  }
  // Tr(rho op) = sum_ij rho_ij op_ji
  return (rho.matrix().transpose().cwiseProduct(op.matrix())).sum();
}

Complex expectation(const StateVector& psi, const JointOperator& op) {
  if (!(psi.cutoff() == op.cutoff())) {
    throw Error(ErrorKind::DimensionMismatch, "state and operator use different cutoffs");
  }
  return psi.amplitudes().dot(op.matrix() * psi.amplitudes());
}

double hermiticity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "Hermiticity check needs a square matrix");
  }
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs_difference(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "matrices differ in shape");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

Matrix photon_subblock(const Matrix& joint, FockCutoff cutoff, int levels) {
  const int d = cutoff.dim();
  if (joint.rows() != 2 * d || joint.cols() != 2 * d) {
    throw Error(ErrorKind::DimensionMismatch, "photon_subblock needs a joint matrix");
  }
  if (levels < 1 || levels > d) {
    throw Error(ErrorKind::InvalidArgument, "photon_subblock levels must be in [1, dcut]");
  }
  Matrix out(2 * levels, 2 * levels);
  for (int s = 0; s < 2; ++s) {
    for (int r = 0; r < 2; ++r) {
      out.block(s * levels, r * levels, levels, levels) =
          joint.block(s * d, r * d, levels, levels);
    }
  }
  return out;
}

}  // namespace twofield
