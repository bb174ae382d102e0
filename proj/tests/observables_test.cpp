#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "twofield/hamiltonians.hpp"
#include "twofield/observables.hpp"

namespace twofield {
namespace {

using std::numbers::pi;

TEST(SigmaXClosedForm, UnityAtZeroTime) {
  for (char panel : {'a', 'b', 'c'}) {
    EXPECT_NEAR(sigma_x_closed_form(figure_params(panel), 0.0), 1.0, 1e-12) << panel;
  }
  SystemParams p = figure_params('b');
  p.epsilon = Complex(0.4, -0.3);
  EXPECT_NEAR(sigma_x_closed_form(p, 0.0), 1.0, 1e-12);
}

TEST(SigmaXClosedForm, DegenerateTermCountsFully) {
  // eps = 0, chi = -1, delta_tilde = 2: the n = 2 block has Omega = 0.
  const SystemParams p = figure_params('a');
  EXPECT_NEAR(sigma_x_closed_form(p, 0.0), 1.0, 1e-12);
  EXPECT_TRUE(std::isfinite(sigma_x_closed_form(p, 1.0)));
}

TEST(SigmaXClosedForm, UndampedLimitMatchesDispersiveSum) {
  SystemParams p = figure_params('a');
  p.gamma = 1e12;
  const DerivedParams d = derived_params(p);
  const double mean = std::norm(p.alpha - d.beta);
  const double t = 0.3;
  EXPECT_NEAR(sigma_x_closed_form(p, t),
              oracle::undamped_polarization(mean, d.chi, d.delta_tilde, t), 1e-6);
}

TEST(SigmaXClosedForm, BoundedByOne) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    SystemParams p;
    p.lambda = 0.5 + u(rng);
    p.delta = (u(rng) < 0.5 ? -1.0 : 1.0) * (1.0 + 3.0 * u(rng));
    p.epsilon = Complex(u(rng) - 0.5, u(rng) - 0.5);
    p.gamma = std::pow(10.0, 1.0 + 5.0 * u(rng));
    p.alpha = Complex(2.0 * u(rng), u(rng));
    const SigmaXSeries series(p);
    for (int k = 0; k <= 200; ++k) {
      EXPECT_LE(std::abs(series(0.1 * k)), 1.0 + 1e-9);
    }
  }
}

TEST(SigmaXClosedForm, CutoffTooSmall) {
  SystemParams p = figure_params('b');
  try {
    SigmaXSeries(p, {8});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CutoffTooSmall);
  }
  const SigmaXSeries s(p);
  EXPECT_EQ(s.n_max(), 64);
  EXPECT_LT(s.discarded_mass(), 1e-12);
}

TEST(SigmaXClosedForm, AgreesWithStateEvolution) {
  for (char panel : {'a', 'b', 'c'}) {
    const SystemParams p = figure_params(panel);
    const FockCutoff c = p.cutoff;
    const SpectralMilburn sm(effective_hamiltonian_displaced(p, c), p.gamma);
    const JointDensity rho0 = initial_density(p, c);
    const SigmaXSeries series(p);
    double worst = 0.0;
    for (int k = 0; k <= 40; ++k) {
      const double t = 4.0 * pi * k / 40.0;
      worst = std::max(worst, std::abs(series(t) - sigma_x_from_state(sm.evolve(rho0, t))));
    }
    EXPECT_LE(worst, 1e-8) << panel;
  }
}

TEST(SigmaXClosedForm, AgreesWithStateEvolutionForComplexDrive) {
  SystemParams p = figure_params('b');
  p.epsilon = Complex(0.3, 0.4);
  p.alpha = Complex(2.0, 0.5);
  const FockCutoff c = p.cutoff;
  const SpectralMilburn sm(effective_hamiltonian_displaced(p, c), p.gamma);
  const JointDensity rho0 = initial_density(p, c);
  for (double t : {0.0, 0.7, 2.2, 5.0}) {
    EXPECT_NEAR(sigma_x_closed_form(p, t), sigma_x_from_state(sm.evolve(rho0, t)), 1e-8);
  }
}

TEST(SigmaXFromState, SimpleStates) {
  const SystemParams p = figure_params('b');
  const FockCutoff c = p.cutoff;
  EXPECT_NEAR(sigma_x_from_state(initial_density(p, c)), 1.0, 1e-12);
  Matrix2 excited = Matrix2::Zero();
  excited(0, 0) = 1.0;
  EXPECT_NEAR(sigma_x_from_state(JointDensity::product(excited, coherent_state(p.alpha, c))),
              0.0, 1e-15);
}

TEST(SigmaXFromState, QuarterPeriodOfPanelA) {
  const SystemParams p = figure_params('a');
  const FockCutoff c = p.cutoff;
  const JointDensity rho =
      milburn_spectral_evolve(initial_density(p, c), effective_hamiltonian_displaced(p, c),
                              pi / 2.0, p.gamma);
  EXPECT_NEAR(sigma_x_from_state(rho), sigma_x_closed_form(p, pi / 2.0), 1e-8);
}

TEST(AtomicInversionAndPurity, ReferenceStates) {
  const SystemParams p = figure_params('b');
  const JointDensity rho0 = initial_density(p, p.cutoff);
  EXPECT_NEAR(atomic_inversion(rho0), 0.0, 1e-14);
  EXPECT_NEAR(purity(rho0), 1.0, 1e-12);

  const FockCutoff c(8);
  const JointDensity mixed =
      JointDensity::product(0.5 * Matrix2::Identity(), coherent_state(0.0, c));
  EXPECT_NEAR(atomic_inversion(mixed), 0.0, 1e-15);
  EXPECT_NEAR(purity(mixed), 0.5, 1e-15);
}

TEST(AtomicInversionAndPurity, PurityBoundsUnderDecoherence) {
  const SystemParams p = figure_params('b');
  const JointDensity rho =
      milburn_spectral_evolve(initial_density(p, p.cutoff),
                              effective_hamiltonian_displaced(p, p.cutoff), 2.0, p.gamma);
  const double value = purity(rho);
  EXPECT_GT(value, 0.0);
  EXPECT_LE(value, 1.0 + 1e-12);
}

TEST(RevivalMetrics, ConstantSeries) {
  TimeSeries s;
  for (int k = 0; k <= 100; ++k) s.push_back(0.1 * k, -0.25);
  const RevivalMetrics m = revival_metrics(s, {1.0, 2.0}, {5.0, 6.0});
  EXPECT_EQ(m.collapse_floor, 0.25);
  EXPECT_EQ(m.revival_peak, 0.25);
  EXPECT_GE(m.revival_time, 5.0);
  EXPECT_LE(m.revival_time, 6.0);
}

TEST(RevivalMetrics, TriangularPulse) {
  TimeSeries s;
  for (int k = 0; k <= 200; ++k) {
    const double t = 0.05 * k;
    s.push_back(t, std::max(0.0, 1.0 - std::abs(t - 7.25) / 0.5));
  }
  const RevivalMetrics m = revival_metrics(s, {1.0, 3.0}, {6.0, 8.5});
  EXPECT_EQ(m.collapse_floor, 0.0);
  EXPECT_NEAR(m.revival_peak, 1.0, 1e-12);
  EXPECT_NEAR(m.revival_time, 7.25, 1e-12);
}

TEST(RevivalMetrics, EmptyWindow) {
  TimeSeries s;
  s.push_back(0.0, 1.0);
  s.push_back(1.0, 1.0);
  EXPECT_THROW(revival_metrics(s, {0.0, 1.0}, {3.0, 4.0}), Error);
  EXPECT_THROW(window_max_abs(s, {0.2, 0.8}), Error);
}

TEST(RevivalMetrics, PanelARevivesNearPi) {
  const SystemParams p = figure_params('a');
  const DerivedParams d = derived_params(p);
  const SigmaXSeries series(p);
  const TimeSeries ts = tabulate(uniform_grid(12.0, 2400), std::cref(series));
  const RevivalMetrics m =
      revival_metrics(ts, default_collapse_window(d), default_revival_window(d));
  EXPECT_NEAR(m.revival_time, pi, 0.2);
  EXPECT_GE(window_max_abs(ts, {2.9, 3.4}), 3.0 * window_max_abs(ts, {1.5, 2.5}));

  // The undamped dispersive sum sets the same structure.
  TimeSeries undamped;
  const double mean = std::norm(p.alpha - d.beta);
  for (double t : uniform_grid(12.0, 2400)) {
    undamped.push_back(t, oracle::undamped_polarization(mean, d.chi, d.delta_tilde, t));
  }
  const RevivalMetrics u =
      revival_metrics(undamped, default_collapse_window(d), default_revival_window(d));
  EXPECT_NEAR(u.revival_time, pi, 0.2);
}

TEST(RevivalMetrics, StrongerDecoherenceLowersRevival) {
  auto peak = [](char panel) {
    const SystemParams p = figure_params(panel);
    const DerivedParams d = derived_params(p);
    const TimeSeries ts = tabulate(uniform_grid(12.0, 2400), SigmaXSeries(p));
    return revival_metrics(ts, default_collapse_window(d), default_revival_window(d)).revival_peak;
  };
  EXPECT_LT(peak('b'), peak('c'));
}

TEST(RevivalWindows, ScaleWithChi) {
  const DerivedParams d = derived_params(figure_params('a'));
  EXPECT_DOUBLE_EQ(revival_period(d), pi);
  EXPECT_DOUBLE_EQ(default_collapse_window(d).begin, 1.5);
  EXPECT_DOUBLE_EQ(default_collapse_window(d).end, 2.5);
  EXPECT_DOUBLE_EQ(default_revival_window(d).begin, pi - 0.5);
  EXPECT_DOUBLE_EQ(default_revival_window(d).end, pi + 0.5);
}

TEST(TimeSeries, StrictlyIncreasing) {
  TimeSeries s;
  s.push_back(0.0, 1.0);
  EXPECT_THROW(s.push_back(0.0, 2.0), Error);
  EXPECT_THROW(s.push_back(-1.0, 2.0), Error);
  s.push_back(0.5, 2.0);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s[1].value, 2.0);
}

TEST(UniformGrid, Endpoints) {
  const std::vector<double> g = uniform_grid(12.0, 2400);
  ASSERT_EQ(g.size(), 2400u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 12.0);
  EXPECT_THROW(uniform_grid(12.0, 1), Error);
  EXPECT_THROW(uniform_grid(-1.0, 10), Error);
}

TEST(EvaluateOnGrid, IndependentOfThreadCount) {
  const SigmaXSeries series(figure_params('b'));
  const std::vector<double> grid = uniform_grid(12.0, 997);
  const std::vector<double> one = evaluate_on_grid(grid, std::cref(series), 1);
  for (unsigned threads : {2u, 3u, 8u}) {
    EXPECT_EQ(evaluate_on_grid(grid, std::cref(series), threads), one);
  }
}

}  // namespace
}  // namespace twofield
