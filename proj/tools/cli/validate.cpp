#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <string>

#include "twofield/dynamics.hpp"
#include "twofield/hamiltonians.hpp"
#include "twofield/observables.hpp"
#include "twofield_cli.hpp"

namespace twofield::cli {

namespace {

struct Check {
  std::string name;
  double tolerance;
  std::function<double()> measure;  // returns the observed discrepancy
};

SystemParams at_cutoff(SystemParams p, int dcut) {
  p.cutoff = FockCutoff(dcut);
  return p;
}

double propagator_block_check(Fault fault) {
  double worst = 0.0;
  for (char panel : {'a', 'b'}) {
    const SystemParams p = figure_params(panel);
    const DerivedParams d = derived_params(p);
    for (int n = 0; n < 12; ++n) {
      for (double t : {0.3, 1.0, 2.7}) {
        PropagatorBlock b = propagator_block(n, t, p, d);
        if (fault == Fault::PropagatorU22Sign) b.u22 = -b.u22;
        const double detuning = d.chi * n + d.delta_tilde;
        Matrix generator(2, 2);
        generator << detuning, p.epsilon, std::conj(p.epsilon), -detuning;
        const Matrix oracle = matrix_exponential(Matrix(Complex(0.0, -t) * generator));
        worst = std::max(worst, max_abs_difference(Matrix(b.matrix()), oracle));
      }
    }
  }
  return worst;
}

double effective_propagator_check() {
  const SystemParams p = at_cutoff(figure_params('b'), 32);
  const FockCutoff c = p.cutoff;
  const double t = 0.5;
  const JointOperator dense = matrix_exponential(
      Complex(0.0, -t) * effective_hamiltonian_displaced(p, c));
  return compare_operators(effective_propagator(t, p, c), dense, 16);
}

double poisson_vs_spectral_check() {
  SystemParams p = at_cutoff(figure_params('b'), 32);
  p.gamma = 50.0;
  const JointOperator h = effective_hamiltonian_displaced(p, p.cutoff);
  const JointDensity rho0 = initial_density(p, p.cutoff);
  MilburnConfig mc;
  mc.gamma = p.gamma;
  double worst = 0.0;
  for (double t : {0.5, 1.0}) {
    worst = std::max(worst, max_abs_difference(milburn_poisson_evolve(rho0, h, t, mc).rho.matrix(),
                                               milburn_spectral_evolve(rho0, h, t, p.gamma).matrix()));
  }
  return worst;
}

double closed_form_vs_state_check() {
  double worst = 0.0;
  for (char panel : {'a', 'b', 'c'}) {
    const SystemParams p = figure_params(panel);
    const SpectralMilburn milburn(effective_hamiltonian_displaced(p, p.cutoff), p.gamma);
    const JointDensity rho0 = initial_density(p, p.cutoff);
    const SigmaXSeries series(p);
    for (double t : uniform_grid(4.0 * std::numbers::pi, 25)) {
      worst = std::max(worst, std::abs(series(t) - sigma_x_from_state(milburn.evolve(rho0, t))));
    }
  }
  return worst;
}

double unitary_limit_check() {
  SystemParams p = at_cutoff(figure_params('b'), 40);
  p.gamma = 1e10;
  const JointOperator h = effective_hamiltonian_displaced(p, p.cutoff);
  const JointDensity rho0 = initial_density(p, p.cutoff);
  const SpectralMilburn milburn(h, p.gamma);
  double worst = 0.0;
  for (double t : {0.7, 2.0, 2.0 * std::numbers::pi}) {
    worst = std::max(worst, std::abs(sigma_x_from_state(milburn.evolve(rho0, t)) -
                                     sigma_x_from_state(schrodinger_evolve(rho0, h, t))));
  }
  return worst;
}

double first_order_limit_check() {
  SystemParams p = at_cutoff(figure_params('b'), 16);
  p.alpha = 1.0;
  const JointOperator h = effective_hamiltonian_displaced(p, p.cutoff);
  const JointDensity rho0 = initial_density(p, p.cutoff);
  const double t = 1.0;
  return max_abs_difference(
      lindblad_first_order_evolve(rho0, h, t, 1e12, lindblad_default_step(h)).matrix(),
      schrodinger_evolve(rho0, h, t).matrix());
}

double normalization_check() {
  double worst = 0.0;
  for (char panel : {'a', 'b', 'c'}) {
    worst = std::max(worst, std::abs(sigma_x_closed_form(figure_params(panel), 0.0) - 1.0));
  }
  return worst;
}

}  // namespace

int validate(std::ostream& out, Fault fault) {
  const std::vector<Check> checks = {
      {"propagator-block", 1e-12, [fault] { return propagator_block_check(fault); }},
      {"effective-propagator", 1e-7, effective_propagator_check},
      {"poisson-vs-spectral", 1e-9, poisson_vs_spectral_check},
      {"closed-form-vs-state", 1e-8, closed_form_vs_state_check},
      {"unitary-limit", 1e-5, unitary_limit_check},
      {"first-order-limit", 1e-6, first_order_limit_check},
      {"normalization", 1e-12, normalization_check},
  };

  int failures = 0;
  for (const Check& check : checks) {
    const auto start = std::chrono::steady_clock::now();
    double observed = 0.0;
    bool ok = false;
    std::string detail;
    try {
      observed = check.measure();
      ok = observed <= check.tolerance;
    } catch (const std::exception& e) {
      detail = std::string(" (") + e.what() + ")";
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << (ok ? "PASS " : "FAIL ") << std::left << std::setw(22) << check.name
        << " observed " << std::scientific << std::setprecision(3) << observed << " tol "
        << check.tolerance << std::defaultfloat << " (" << std::fixed << std::setprecision(2)
        << seconds << " s)" << std::defaultfloat << detail << '\n';
    if (!ok) ++failures;
  }
  if (failures > 0) {
    out << failures << " check(s) failed\n";
    return kExitValidationMismatch;
  }
  out << "all checks passed\n";
  return kExitOk;
}

}  // namespace twofield::cli
