#include "twofield/params.hpp"

#include <cmath>

namespace twofield {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

void SystemParams::validate_finite() const {
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw Error(ErrorKind::InvalidArgument, "lambda must be finite and non-negative");
  }
  if (!std::isfinite(delta)) {
    throw Error(ErrorKind::InvalidArgument, "delta must be finite");
  }
  if (!std::isfinite(gamma) || gamma <= 0.0) {
    throw Error(ErrorKind::InvalidArgument, "gamma must be finite and positive");
  }
  if (!finite(epsilon) || !finite(alpha)) {
    throw Error(ErrorKind::InvalidArgument, "epsilon and alpha must be finite");
  }
}

void SystemParams::validate() const {
  validate_finite();
  if (lambda == 0.0) {
    throw Error(ErrorKind::SingularChi, "lambda = 0 makes chi vanish");
  }
  if (delta == 0.0) {
    throw Error(ErrorKind::SingularDetuning, "delta = 0 is outside the dispersive model");
  }
}

DerivedParams derived_params(const SystemParams& p) {
  p.validate();
  DerivedParams d;
  d.eta = -p.lambda / p.delta;
  d.chi = -2.0 * p.lambda * p.lambda / p.delta;
  if (d.chi == 0.0) {
    throw Error(ErrorKind::SingularChi, "chi underflowed to zero");
  }
  d.beta = d.eta / d.chi;
  d.delta_tilde = p.delta - std::norm(p.epsilon) / d.chi;
  return d;
}

std::optional<std::string> dispersive_validity_warning(const SystemParams& p) {
  if (std::abs(p.delta) >= kDispersiveRatio * p.lambda) return std::nullopt;
  return "dispersive approximation questionable: |delta| = " +
         std::to_string(std::abs(p.delta)) + " < 5 lambda = " +
         std::to_string(kDispersiveRatio * p.lambda);
}

SystemParams figure_params(char panel) {
  SystemParams p;
  p.lambda = 1.0;
  p.delta = 2.0;
  p.alpha = 2.5;
  switch (panel) {
    case 'a':
      p.epsilon = 0.0;
      p.gamma = 1e6;
      break;
    case 'b':
      p.epsilon = 0.5;
      p.gamma = 1e3;
      break;
    case 'c':
      p.epsilon = 0.5;
      p.gamma = 1e6;
      break;
    default:
      throw Error(ErrorKind::InvalidArgument,
                  std::string("unknown figure panel '") + panel + "'");
  }
  return p;
}

}  // namespace twofield
