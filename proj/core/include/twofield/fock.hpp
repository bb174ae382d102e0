#pragma once

// Truncated Fock-space algebra for a two-level atom coupled to one field mode.
//
// Joint basis ordering is atom-major with the excited level first:
//   index(s, n) = s * dcut + n,   s = 0 for |e>, s = 1 for |g>.
// A joint operator is therefore a 2x2 array of dcut x dcut field blocks,
// [[ee, eg], [ge, gg]], and sigma_z = diag(+1, -1).

#include <utility>

#include "twofield/types.hpp"

namespace twofield {

enum class AtomLevel : int { Excited = 0, Ground = 1 };

inline int joint_index(AtomLevel s, int n, FockCutoff cutoff) {
  return static_cast<int>(s) * cutoff.dim() + n;
}

struct FieldSpace {
  static int dim(FockCutoff c) { return c.dim(); }
  static constexpr const char* kName = "field";
};
struct JointSpace {
  static int dim(FockCutoff c) { return c.joint_dim(); }
  static constexpr const char* kName = "joint";
};

/// Dense operator on the field space or the joint space under a fixed cutoff.
template <class Space>
class CutoffOperator {
 public:
  CutoffOperator(Matrix entries, FockCutoff cutoff)
      : entries_(std::move(entries)), cutoff_(cutoff) {
    const int d = Space::dim(cutoff_);
    if (entries_.rows() != d || entries_.cols() != d) {
      throw Error(ErrorKind::DimensionMismatch,
                  std::string(Space::kName) + " operator must be " +
                      std::to_string(d) + "x" + std::to_string(d));
    }
  }

  static CutoffOperator zero(FockCutoff c) {
    const int d = Space::dim(c);
    return CutoffOperator(Matrix::Zero(d, d), c);
  }
  static CutoffOperator identity(FockCutoff c) {
    const int d = Space::dim(c);
    return CutoffOperator(Matrix::Identity(d, d), c);
  }

  const Matrix& matrix() const noexcept { return entries_; }
  FockCutoff cutoff() const noexcept { return cutoff_; }
  int dim() const noexcept { return static_cast<int>(entries_.rows()); }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  CutoffOperator adjoint() const {
    return CutoffOperator(entries_.adjoint(), cutoff_);
  }

  CutoffOperator& operator+=(const CutoffOperator& rhs) {
    check_same(rhs);
    entries_ += rhs.entries_;
    return *this;
  }
  CutoffOperator& operator-=(const CutoffOperator& rhs) {
    check_same(rhs);
    entries_ -= rhs.entries_;
    return *this;
  }
  CutoffOperator& operator*=(Complex s) {
    entries_ *= s;
    return *this;
  }

  friend CutoffOperator operator+(CutoffOperator lhs, const CutoffOperator& rhs) {
    return lhs += rhs;
  }
  friend CutoffOperator operator-(CutoffOperator lhs, const CutoffOperator& rhs) {
    return lhs -= rhs;
  }
  friend CutoffOperator operator*(Complex s, CutoffOperator op) { return op *= s; }
  friend CutoffOperator operator*(CutoffOperator op, Complex s) { return op *= s; }
  friend CutoffOperator operator*(const CutoffOperator& lhs,
                                  const CutoffOperator& rhs) {
    lhs.check_same(rhs);
    return CutoffOperator(lhs.entries_ * rhs.entries_, lhs.cutoff_);
  }

 private:
  void check_same(const CutoffOperator& rhs) const {
    if (!(cutoff_ == rhs.cutoff_)) {
      throw Error(ErrorKind::DimensionMismatch, "operators use different cutoffs");
    }
  }

  Matrix entries_;
  FockCutoff cutoff_;
};

using FieldOperator = CutoffOperator<FieldSpace>;
using JointOperator = CutoffOperator<JointSpace>;

/// 2x2 operator on the atom, rows/cols ordered (|e>, |g>).
class AtomOperator {
 public:
  explicit AtomOperator(const Matrix2& entries) : entries_(entries) {}

  static AtomOperator identity() { return AtomOperator(Matrix2::Identity()); }
  static AtomOperator sigma_z();
  static AtomOperator sigma_plus();   // |e><g|
  static AtomOperator sigma_minus();  // |g><e|
  static AtomOperator sigma_x();
  static AtomOperator sigma_y();

  const Matrix2& matrix() const noexcept { return entries_; }

 private:
  Matrix2 entries_;
};

/// Normalized field-only state of length dcut.
class FieldState {
 public:
  FieldState(Vector amplitudes, FockCutoff cutoff);

  const Vector& amplitudes() const noexcept { return amplitudes_; }
  FockCutoff cutoff() const noexcept { return cutoff_; }

 private:
  Vector amplitudes_;
  FockCutoff cutoff_;
};

/// Normalized joint state of length 2*dcut (norm = 1 within 1e-10).
class StateVector {
 public:
  StateVector(Vector amplitudes, FockCutoff cutoff);

  const Vector& amplitudes() const noexcept { return amplitudes_; }
  FockCutoff cutoff() const noexcept { return cutoff_; }

 private:
  Vector amplitudes_;
  FockCutoff cutoff_;
};

/// Joint density matrix. Construction checks Hermiticity and unit trace
/// (both within 1e-10); positivity is checked separately with
/// min_eigenvalue() because it costs a diagonalization.
class JointDensity {
 public:
  static constexpr double kTolerance = 1e-10;

  JointDensity(Matrix entries, FockCutoff cutoff);

  static JointDensity pure(const StateVector& psi);
  /// rho_atom (x) |phi><phi|, rho_atom a 2x2 density in the (|e>, |g>) basis.
  static JointDensity product(const Matrix2& atom_density, const FieldState& field);

  const Matrix& matrix() const noexcept { return entries_; }
  FockCutoff cutoff() const noexcept { return cutoff_; }
  int dim() const noexcept { return static_cast<int>(entries_.rows()); }

  Complex trace() const { return entries_.trace(); }
  double min_eigenvalue() const;

 private:
  Matrix entries_;
  FockCutoff cutoff_;
};

// --- field operators --------------------------------------------------------

FieldOperator annihilation(FockCutoff cutoff);
FieldOperator creation(FockCutoff cutoff);
FieldOperator number(FockCutoff cutoff);

/// Largest |beta| the cutoff tolerates: |beta|^2 + 6|beta| < dcut.
bool displacement_fits(Complex beta, FockCutoff cutoff);

/// exp(beta a^dag - beta^* a) on the truncated space. Throws TruncationRisk
/// when displacement_fits() fails.
FieldOperator displacement(Complex beta, FockCutoff cutoff);

/// Poisson mass |<n|alpha>|^2 retained below the cutoff, before renormalization.
double coherent_state_weight(Complex alpha, FockCutoff cutoff);

/// Coherent state e^{-|alpha|^2/2} sum alpha^n/sqrt(n!) |n>, renormalized on
/// the retained levels. Throws CutoffTooSmall when the discarded Poisson
/// tail is 1e-12 or more.
FieldState coherent_state(Complex alpha, FockCutoff cutoff);

// --- joint assembly ---------------------------------------------------------

/// Kronecker product atom (x) field in atom-major order.
JointOperator atom_field(const AtomOperator& atom, const FieldOperator& field);

/// atom_field(atom, I).
JointOperator atom_only(const AtomOperator& atom, FockCutoff cutoff);

/// |atom> (x) |field>, with atom = (c_e, c_g).
StateVector product_state(const Eigen::Vector2cd& atom, const FieldState& field);

// --- exponentials and expectations -------------------------------------------

/// exp(M) by scaling and squaring with a Pade core. Throws NumericalFailure
/// if the result is not finite.
Matrix matrix_exponential(const Matrix& m);
FieldOperator matrix_exponential(const FieldOperator& m);
JointOperator matrix_exponential(const JointOperator& m);

Complex expectation(const JointDensity& rho, const JointOperator& op);
Complex expectation(const StateVector& psi, const JointOperator& op);

/// max |M - M^dag|.
double hermiticity_defect(const Matrix& m);

/// max |a - b| over all entries.
double max_abs_difference(const Matrix& a, const Matrix& b);

/// Rows/columns of the joint space whose photon number is below `levels`,
/// in both atom sectors. Used to compare operators away from the
/// truncation edge.
Matrix photon_subblock(const Matrix& joint, FockCutoff cutoff, int levels);

}  // namespace twofield
