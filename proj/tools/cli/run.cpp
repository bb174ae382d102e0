#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "twofield/dynamics.hpp"
#include "twofield/hamiltonians.hpp"
#include "twofield/observables.hpp"
#include "twofield_cli.hpp"

namespace twofield::cli {

namespace {

constexpr std::pair<Method, std::string_view> kMethods[] = {
    {Method::ClosedForm, "closed-form"}, {Method::Spectral, "spectral"},
    {Method::Poisson, "poisson"},       {Method::Lindblad, "lindblad"},
    {Method::Schrodinger, "schrodinger"}, {Method::FullOracle, "full-oracle"},
};

constexpr std::pair<Observable, std::string_view> kObservables[] = {
    {Observable::SigmaX, "sigma_x"},
    {Observable::SigmaZ, "sigma_z"},
    {Observable::Purity, "purity"},
};

AtomOperator atom_operator_for(Observable o) {
  return o == Observable::SigmaZ ? AtomOperator::sigma_z() : AtomOperator::sigma_x();
}

double observe(const JointDensity& rho, Observable o) {
  switch (o) {
    case Observable::SigmaX: return sigma_x_from_state(rho);
    case Observable::SigmaZ: return atomic_inversion(rho);
    case Observable::Purity: return purity(rho);
  }
  return 0.0;
}

std::vector<std::vector<double>> closed_form_columns(const RunConfig& cfg,
                                                     const std::vector<double>& grid) {
  for (Observable o : cfg.observables) {
    if (o != Observable::SigmaX) {
      throw Error(ErrorKind::InvalidArgument,
                  "closed-form method only provides sigma_x; use a state method for " +
                      std::string(to_string(o)));
    }
  }
  const SigmaXSeries series(cfg.params);
  const std::vector<double> values =
      evaluate_on_grid(grid, [&](double t) { return series(t); }, cfg.threads);
  return std::vector<std::vector<double>>(cfg.observables.size(), values);
}

// Energy-basis fast path: observables are traces against V^dag O V, and the
// purity is basis independent.
std::vector<std::vector<double>> spectral_columns(const RunConfig& cfg,
                                                  const std::vector<double>& grid,
                                                  const JointOperator& h) {
  const FockCutoff cutoff = cfg.params.cutoff;
  const SpectralMilburn milburn(h, cfg.params.gamma);
  const Matrix rho_e0 = milburn.to_energy_basis(initial_density(cfg.params, cutoff).matrix());

  std::vector<Matrix> ops_e;
  for (Observable o : cfg.observables) {
    ops_e.push_back(milburn.to_energy_basis(atom_only(atom_operator_for(o), cutoff).matrix()));
  }

  std::vector<std::vector<double>> columns;
  for (std::size_t k = 0; k < cfg.observables.size(); ++k) {
    const Observable o = cfg.observables[k];
    const Matrix& op_e = ops_e[k];
    columns.push_back(evaluate_on_grid(
        grid,
        [&](double t) {
          const Matrix rho_e = milburn.evolve_energy_basis(rho_e0, t);
          if (o == Observable::Purity) return rho_e.squaredNorm();
          return (rho_e.transpose().cwiseProduct(op_e)).sum().real();
        },
        cfg.threads));
  }
  return columns;
}

std::vector<std::vector<double>> tabulate_states(
    const RunConfig& cfg, const std::vector<JointDensity>& states) {
  std::vector<std::vector<double>> columns;
  for (Observable o : cfg.observables) {
    std::vector<double> col;
    col.reserve(states.size());
    for (const JointDensity& rho : states) col.push_back(observe(rho, o));
    columns.push_back(std::move(col));
  }
  return columns;
}

std::vector<std::vector<double>> poisson_columns(const RunConfig& cfg,
                                                 const std::vector<double>& grid,
                                                 const JointOperator& h) {
  const JointDensity rho0 = initial_density(cfg.params, cfg.params.cutoff);
  MilburnConfig mc;
  mc.gamma = cfg.params.gamma;
  std::vector<std::vector<double>> columns;
  for (Observable o : cfg.observables) {
    columns.push_back(evaluate_on_grid(
        grid,
        [&](double t) { return observe(milburn_poisson_evolve(rho0, h, t, mc).rho, o); },
        cfg.threads));
  }
  return columns;
}

std::vector<std::vector<double>> lindblad_columns(const RunConfig& cfg,
                                                  const std::vector<double>& grid,
                                                  const JointOperator& h) {
  const double dt = cfg.dt > 0.0 ? cfg.dt : lindblad_default_step(h);
  std::vector<JointDensity> states{initial_density(cfg.params, cfg.params.cutoff)};
  for (std::size_t i = 1; i < grid.size(); ++i) {
    states.push_back(lindblad_first_order_evolve(states.back(), h, grid[i] - grid[i - 1],
                                                 cfg.params.gamma, dt));
  }
  return tabulate_states(cfg, states);
}

std::vector<std::vector<double>> schrodinger_columns(const RunConfig& cfg,
                                                     const std::vector<double>& grid,
                                                     const JointOperator& h) {
  std::vector<JointDensity> states{initial_density(cfg.params, cfg.params.cutoff)};
  for (std::size_t i = 1; i < grid.size(); ++i) {
    states.push_back(schrodinger_evolve(states.back(), h, grid[i] - grid[i - 1]));
  }
  return tabulate_states(cfg, states);
}

}  // namespace

std::optional<Method> parse_method(std::string_view name) {
  for (const auto& [m, n] : kMethods) {
    if (n == name) return m;
  }
  return std::nullopt;
}

std::string_view to_string(Method m) {
  for (const auto& [k, n] : kMethods) {
    if (k == m) return n;
  }
  return "unknown";
}

std::optional<Observable> parse_observable(std::string_view name) {
  for (const auto& [o, n] : kObservables) {
    if (n == name) return o;
  }
  return std::nullopt;
}

std::string_view to_string(Observable o) {
  for (const auto& [k, n] : kObservables) {
    if (k == o) return n;
  }
  return "unknown";
}

RunTable compute(const RunConfig& cfg) {
  cfg.params.validate();
  if (cfg.observables.empty()) {
    throw Error(ErrorKind::InvalidArgument, "at least one observable is required");
  }
  if (!(cfg.dt >= 0.0) || !std::isfinite(cfg.dt)) {
    throw Error(ErrorKind::InvalidArgument, "dt must be >= 0");
  }

  RunTable table;
  table.t = uniform_grid(cfg.t_max, cfg.n_steps);
  table.observables = cfg.observables;

  const FockCutoff cutoff = cfg.params.cutoff;
  switch (cfg.method) {
    case Method::ClosedForm:
      table.columns = closed_form_columns(cfg, table.t);
      break;
    case Method::Spectral:
      table.columns =
          spectral_columns(cfg, table.t, effective_hamiltonian_displaced(cfg.params, cutoff));
      break;
    case Method::FullOracle:
      table.columns = spectral_columns(cfg, table.t, interaction_hamiltonian(cfg.params, cutoff));
      break;
    case Method::Poisson:
      table.columns =
          poisson_columns(cfg, table.t, effective_hamiltonian_displaced(cfg.params, cutoff));
      break;
    case Method::Lindblad:
      table.columns =
          lindblad_columns(cfg, table.t, effective_hamiltonian_displaced(cfg.params, cutoff));
      break;
    case Method::Schrodinger:
      table.columns =
          schrodinger_columns(cfg, table.t, effective_hamiltonian_displaced(cfg.params, cutoff));
      break;
  }
  return table;
}

std::string format_value(double v) {
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::NumericalFailure, "refusing to emit a non-finite value");
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15f", v);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string format_csv(const RunTable& table) {
  std::string out = "t";
  for (Observable o : table.observables) {
    out += ',';
    out += to_string(o);
  }
  out += '\n';
  for (std::size_t i = 0; i < table.t.size(); ++i) {
    out += format_value(table.t[i]);
    for (const auto& col : table.columns) {
      out += ',';
      out += format_value(col[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

nlohmann::ordered_json params_json(const SystemParams& p) {
  nlohmann::ordered_json j;
  j["lambda"] = p.lambda;
  j["epsilon"] = p.epsilon.real();
  j["epsilon_im"] = p.epsilon.imag();
  j["delta"] = p.delta;
  j["gamma"] = p.gamma;
  j["alpha"] = p.alpha.real();
  j["alpha_im"] = p.alpha.imag();
  j["cutoff"] = p.cutoff.dim();
  return j;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << content;
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& err) {
  std::string csv;
  nlohmann::ordered_json meta;
  try {
    if (auto warning = dispersive_validity_warning(cfg.params)) err << "warning: " << *warning << '\n';
    const RunTable table = compute(cfg);
    csv = format_csv(table);

    meta["method"] = to_string(cfg.method);
    meta["extension"] = cfg.method == Method::FullOracle;
    if (cfg.method == Method::FullOracle) {
      meta["note"] = "Milburn evolution under the full interaction Hamiltonian, not the effective one";
    }
    meta["params"] = params_json(cfg.params);
    meta["t_max"] = cfg.t_max;
    meta["n_steps"] = cfg.n_steps;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_numerical_guard() || e.kind() == ErrorKind::NumericalFailure ||
                   e.kind() == ErrorKind::NonHermitian
               ? kExitNumericalGuard
               : kExitInvalidConfig;
  }

  try {
    write_file(cfg.out, csv);
    std::filesystem::path meta_path = cfg.out;
    meta_path += ".meta.json";
    write_file(meta_path, meta.dump(2) + "\n");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}

std::vector<PanelMetrics> fig1(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<PanelMetrics> metrics;
  nlohmann::ordered_json sidecar;
  for (char panel : {'a', 'b', 'c'}) {
    RunConfig cfg;
    cfg.params = figure_params(panel);
    cfg.t_max = 12.0;
    cfg.n_steps = 2400;
    cfg.method = Method::ClosedForm;
    const RunTable table = compute(cfg);
    write_file(dir / (std::string("fig1") + panel + ".csv"), format_csv(table));

    TimeSeries series;
    for (std::size_t i = 0; i < table.t.size(); ++i) series.push_back(table.t[i], table.columns[0][i]);
    const DerivedParams d = derived_params(cfg.params);
    const RevivalMetrics m =
        revival_metrics(series, default_collapse_window(d), default_revival_window(d));
    metrics.push_back({panel, m.collapse_floor, m.revival_peak, m.revival_time});

    nlohmann::ordered_json j;
    j["params"] = params_json(cfg.params);
    j["collapse_window"] = {default_collapse_window(d).begin, default_collapse_window(d).end};
    j["revival_window"] = {default_revival_window(d).begin, default_revival_window(d).end};
    j["collapse_floor"] = m.collapse_floor;
    j["revival_peak"] = m.revival_peak;
    j["revival_time"] = m.revival_time;
    sidecar[std::string(1, panel)] = j;
  }
  write_file(dir / "fig1_metrics.json", sidecar.dump(2) + "\n");
  return metrics;
}

}  // namespace twofield::cli
