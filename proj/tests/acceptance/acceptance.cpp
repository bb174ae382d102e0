// Acceptance battery. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles/oracles.hpp"
#include "twofield/twofield.hpp"

namespace {

using namespace twofield;
using std::numbers::pi;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

SystemParams panel(char which, int dcut = 64, Complex alpha = 2.5) {
  SystemParams p = figure_params(which);
  p.cutoff = FockCutoff(dcut);
  p.alpha = alpha;
  return p;
}

Outcome normalization() {
  std::mt19937_64 rng(20240521);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    SystemParams p;
    p.lambda = 0.5 + 1.5 * u(rng);
    p.delta = (u(rng) < 0.5 ? -1.0 : 1.0) * (1.0 + 9.0 * u(rng));
    p.epsilon = Complex(2.0 * u(rng) - 1.0, 2.0 * u(rng) - 1.0);
    p.gamma = std::pow(10.0, 1.0 + 6.0 * u(rng));
    p.alpha = std::polar(3.0 * u(rng), 2.0 * pi * u(rng));
    worst = std::max(worst, std::abs(sigma_x_closed_form(p, 0.0) - 1.0));
  }
  return {worst <= 1e-12, fmt("max |<sigma_x>(0) - 1| = %.3e over 20 sets (tol 1e-12)", worst)};
}

Outcome route_equivalence() {
  const SystemParams p = panel('b', 32);
  const JointOperator h = effective_hamiltonian_displaced(p, p.cutoff);
  const JointDensity rho0 = initial_density(p, p.cutoff);
  double worst = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    const JointDensity a = milburn_poisson_evolve(rho0, h, t, {50.0}).rho;
    const JointDensity b = milburn_spectral_evolve(rho0, h, t, 50.0);
    worst = std::max(worst, max_abs_difference(a.matrix(), b.matrix()));
  }
  return {worst <= 1e-9, fmt("poisson vs spectral max entry diff = %.3e (tol 1e-9)", worst)};
}

Outcome closed_form_vs_state() {
  double worst = 0.0;
  for (char which : {'a', 'b', 'c'}) {
    const SystemParams p = panel(which);
    const SpectralMilburn sm(effective_hamiltonian_displaced(p, p.cutoff), p.gamma);
    const JointDensity rho0 = initial_density(p, p.cutoff);
    const SigmaXSeries series(p);
    for (double t : uniform_grid(4.0 * pi, 400)) {
      worst = std::max(worst, std::abs(series(t) - sigma_x_from_state(sm.evolve(rho0, t))));
    }
  }
  return {worst <= 1e-8, fmt("max |closed form - state route| = %.3e, 3 panels x 400 points (tol 1e-8)", worst)};
}

Outcome unitary_limit() {
  const SystemParams p = panel('b');
  const JointOperator h = effective_hamiltonian_displaced(p, p.cutoff);
  const JointDensity rho0 = initial_density(p, p.cutoff);
  const SpectralMilburn sm(h, 1e10);
  double worst = 0.0;
  for (double t : uniform_grid(2.0 * pi, 101)) {
    const double a = sigma_x_from_state(sm.evolve(rho0, t));
    const double b = sigma_x_from_state(schrodinger_evolve(rho0, h, t));
    worst = std::max(worst, std::abs(a - b));
  }
  return {worst <= 1e-5, fmt("gamma=1e10 vs unitary max |d<sigma_x>| = %.3e (tol 1e-5)", worst)};
}

TimeSeries panel_series(char which) {
  return tabulate(uniform_grid(12.0, 2400), SigmaXSeries(panel(which)));
}

Outcome collapse_revival() {
  const SystemParams p = panel('a');
  const DerivedParams d = derived_params(p);
  const TimeSeries ts = panel_series('a');
  const RevivalMetrics m = revival_metrics(ts, default_collapse_window(d), default_revival_window(d));
  const double revived = window_max_abs(ts, {2.9, 3.4});
  const double collapsed = window_max_abs(ts, {1.5, 2.5});

  // Same windows on the undamped dispersive sum.
  TimeSeries undamped;
  const double mean = std::norm(p.alpha - d.beta);
  for (double t : uniform_grid(12.0, 2400)) {
    undamped.push_back(t, oracle::undamped_polarization(mean, d.chi, d.delta_tilde, t));
  }
  const RevivalMetrics u =
      revival_metrics(undamped, default_collapse_window(d), default_revival_window(d));
  const double oracle_ratio = window_max_abs(undamped, {2.9, 3.4}) / window_max_abs(undamped, {1.5, 2.5});

  const bool pass = std::abs(m.revival_time - pi) <= 0.2 && revived >= 3.0 * collapsed &&
                    std::abs(u.revival_time - pi) <= 0.2 && oracle_ratio >= 3.0;
  return {pass, fmt("revival at t = %.4f (pi +- 0.2), peak/floor = %.4f/%.4f = %.1f (>= 3); "
                    "undamped sum: t = %.4f, ratio %.1f",
                    m.revival_time, revived, collapsed, revived / collapsed, u.revival_time,
                    oracle_ratio)};
}

Outcome decoherence_degradation() {
  auto peak = [](char which) {
    const DerivedParams d = derived_params(panel(which));
    return revival_metrics(panel_series(which), default_collapse_window(d), default_revival_window(d))
        .revival_peak;
  };
  const double b = peak('b');
  const double c = peak('c');
  return {b < c, fmt("revival peak gamma=1e3: %.5f < gamma=1e6: %.5f", b, c)};
}

Outcome first_order_scaling() {
  auto residual = [](double gamma) {
    SystemParams p = panel('b', 16, 1.0);
    p.gamma = gamma;
    const JointOperator h = effective_hamiltonian_displaced(p, p.cutoff);
    const JointDensity rho0 = initial_density(p, p.cutoff);
    const JointDensity a = lindblad_first_order_evolve(rho0, h, 1.0, gamma, lindblad_default_step(h));
    return max_abs_difference(a.matrix(), milburn_spectral_evolve(rho0, h, 1.0, gamma).matrix());
  };
  const double e100 = residual(100.0);
  const double e200 = residual(200.0);
  const double ratio = e100 / e200;
  return {ratio >= 3.0 && ratio <= 5.0,
          fmt("residual gamma=100: %.3e, gamma=200: %.3e, ratio %.3f (in [3, 5])", e100, e200, ratio)};
}

Outcome small_rotation_order() {
  const SystemParams p = panel('b', 16);
  const JointOperator h = interaction_hamiltonian(p, p.cutoff);
  auto gap = [&](double eta) {
    return operator_norm_gap(small_rotation_exact(h, eta), small_rotation_first_order(h, eta), 16);
  };
  const double g1 = gap(0.1);
  const double g2 = gap(0.05);
  const double ratio = g1 / g2;
  return {ratio >= 3.5 && ratio <= 4.5,
          fmt("operator-norm gap eta=0.1: %.4e, eta=0.05: %.4e, ratio %.3f (in [3.5, 4.5])", g1, g2, ratio)};
}

Outcome invariant_suite() {
  std::vector<std::string> failures;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };

  // Trace, Hermiticity, positivity of the three Milburn routes.
  {
    SystemParams p = panel('b', 16, 1.0);
    p.gamma = 100.0;
    const JointOperator h = effective_hamiltonian_displaced(p, p.cutoff);
    const JointDensity rho0 = initial_density(p, p.cutoff);
    const std::vector<std::pair<const char*, JointDensity>> routes{
        {"poisson", milburn_poisson_evolve(rho0, h, 1.0, {100.0}).rho},
        {"spectral", milburn_spectral_evolve(rho0, h, 1.0, 100.0)},
        {"first-order", lindblad_first_order_evolve(rho0, h, 1.0, 100.0, lindblad_default_step(h))}};
    for (const auto& [name, rho] : routes) {
      check(std::abs(rho.trace() - Complex(1.0)) <= 1e-9, std::string(name) + " trace");
      check(hermiticity_defect(rho.matrix()) <= 1e-10, std::string(name) + " hermiticity");
      check(rho.min_eigenvalue() >= -1e-8, std::string(name) + " positivity");
    }
  }

  // Purity non-increasing over 50 points on [0, 5].
  {
    const SystemParams p = panel('b', 32);
    const SpectralMilburn sm(effective_hamiltonian_displaced(p, p.cutoff), p.gamma);
    const JointDensity rho0 = initial_density(p, p.cutoff);
    double previous = purity(rho0);
    bool monotone = true;
    for (double t : uniform_grid(5.0, 50)) {
      const double current = purity(sm.evolve(rho0, t));
      monotone = monotone && current <= previous + 1e-12;
      previous = current;
    }
    check(monotone, "purity monotonicity");
  }

  // Inversion frozen without drive.
  {
    const SystemParams p = panel('a', 48);
    const SpectralMilburn sm(effective_hamiltonian_displaced(p, p.cutoff), p.gamma);
    const JointDensity rho0 = initial_density(p, p.cutoff);
    double drift = 0.0;
    for (double t : uniform_grid(5.0, 20)) {
      drift = std::max(drift, std::abs(atomic_inversion(sm.evolve(rho0, t)) - atomic_inversion(rho0)));
    }
    check(drift <= 1e-10, "inversion drift");
  }

  // Propagator blocks, effective propagator unitarity and composition.
  {
    const SystemParams p = panel('b');
    const FockCutoff c = p.cutoff;
    double block = 0.0;
    for (int n = 0; n < 64; ++n) {
      const Matrix2 u = propagator_block(n, 3.7, p).matrix();
      block = std::max(block, max_abs_difference(u.adjoint() * u, Matrix::Identity(2, 2)));
    }
    check(block <= 1e-12, "block unitarity");

    const Matrix u1 = effective_propagator(0.7, p, c).matrix();
    const Matrix u2 = effective_propagator(1.6, p, c).matrix();
    const Matrix u12 = effective_propagator(2.3, p, c).matrix();
    const Matrix id = Matrix::Identity(2 * c.dim(), 2 * c.dim());
    check(max_abs_difference(photon_subblock(u1.adjoint() * u1, c, 48), photon_subblock(id, c, 48)) <= 1e-9,
          "propagator unitarity");
    check(max_abs_difference(photon_subblock(u1 * u2, c, 48), photon_subblock(u12, c, 48)) <= 1e-8,
          "composition law");
  }

  // Polarization bound.
  {
    double worst = 0.0;
    for (char which : {'a', 'b', 'c'}) {
      for (const Sample& s : panel_series(which)) worst = std::max(worst, std::abs(s.value));
    }
    check(worst <= 1.0 + 1e-9, "polarization bound");
  }

  if (failures.empty()) return {true, "trace, hermiticity, positivity, purity, inversion, unitarity, composition"};
  std::string detail = "failed:";
  for (const auto& f : failures) detail += " " + f + ";";
  return {false, detail};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "normalization identity", 1.0, normalization},
      {2, "exact Milburn route equivalence", 30.0, route_equivalence},
      {3, "closed form vs state evolution", 60.0, closed_form_vs_state},
      {4, "unitary limit", 30.0, unitary_limit},
      {5, "collapse/revival structure", 10.0, collapse_revival},
      {6, "decoherence degradation", 10.0, decoherence_degradation},
      {7, "first-order expansion scaling", 60.0, first_order_scaling},
      {8, "small-rotation order", 10.0, small_rotation_order},
      {9, "invariant suite", 120.0, invariant_suite},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = elapsed <= c.budget_s;
    const bool pass = outcome.pass && in_budget;
    if (!pass) ++failed;
    std::printf("%s  criterion %d  %-34s %s  [%.2f s / %.0f s%s]\n", pass ? "PASS" : "FAIL", c.id,
                c.name, outcome.detail.c_str(), elapsed, c.budget_s, in_budget ? "" : " over budget");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
