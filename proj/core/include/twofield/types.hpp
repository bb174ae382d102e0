#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "twofield/error.hpp"

namespace twofield {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;

inline constexpr Complex kI{0.0, 1.0};

/// Dimension of the truncated field space: photon numbers 0..dim()-1.
class FockCutoff {
 public:
  static constexpr int kDefault = 64;

  FockCutoff() : dcut_(kDefault) {}
  explicit FockCutoff(int dcut) : dcut_(dcut) {
    if (dcut < 2) {
      throw Error(ErrorKind::InvalidArgument,
                  "Fock cutoff must be at least 2, got " + std::to_string(dcut));
    }
  }

  int dim() const noexcept { return dcut_; }
  /// Dimension of the joint atom (x) field space.
  int joint_dim() const noexcept { return 2 * dcut_; }

  friend bool operator==(FockCutoff, FockCutoff) = default;

 private:
  int dcut_;
};

}  // namespace twofield
