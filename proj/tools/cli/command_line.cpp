#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "twofield_cli.hpp"

namespace twofield::cli {

namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  s = s.substr(first, last - first + 1);
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) {
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

// `key = value` lines, '#' starts a comment. Each entry becomes
// `--key value`.
std::vector<std::string> config_tokens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::FileError::Missing(path);
  std::vector<std::string> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw CLI::ConversionError("config line " + std::to_string(lineno) +
                                 " is not `key = value`: " + line);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || key == "config") {
      throw CLI::ConversionError("config line " + std::to_string(lineno) + " has an invalid key");
    }
    tokens.push_back("--" + key);
    tokens.push_back(value);
  }
  return tokens;
}

// Splices config-file entries right after the `run` token so explicit flags,
// which follow, take precedence under TakeLast.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  const auto run_it = std::find(args.begin(), args.end(), "run");
  if (run_it == args.end()) return args;
  std::string path;
  for (auto it = run_it + 1; it != args.end(); ++it) {
    if (*it == "--config" && it + 1 != args.end()) {
      path = *(it + 1);
    } else if (it->rfind("--config=", 0) == 0) {
      path = it->substr(9);
    }
  }
  if (path.empty()) return args;
  const std::vector<std::string> extra = config_tokens(path);
  args.insert(std::find(args.begin(), args.end(), "run") + 1, extra.begin(), extra.end());
  return args;
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-level atom driven by a quantized and a classical field, evolved under "
               "intrinsic (Milburn) decoherence in the dispersive regime."};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  RunConfig cfg;
  std::string method_name{to_string(cfg.method)};
  std::string observables_arg = "sigma_x";
  double eps_re = cfg.params.epsilon.real();
  double eps_im = cfg.params.epsilon.imag();
  double alpha_re = cfg.params.alpha.real();
  double alpha_im = cfg.params.alpha.imag();
  int cutoff = cfg.params.cutoff.dim();
  std::string out_path = cfg.out.string();
  std::string config_path;

  auto* run_cmd = app.add_subcommand("run", "Evaluate observables on a uniform time grid");
  run_cmd->add_option("--config", config_path, "File of `key = value` lines (flags override it)");
  run_cmd->add_option("--alpha", alpha_re, "Initial coherent amplitude (real part)")->capture_default_str();
  run_cmd->add_option("--alpha-im", alpha_im, "Initial coherent amplitude (imaginary part)")->capture_default_str();
  run_cmd->add_option("--epsilon", eps_re, "Classical-field amplitude, real part (units of lambda)")->capture_default_str();
  run_cmd->add_option("--epsilon-im", eps_im, "Classical-field amplitude, imaginary part")->capture_default_str();
  run_cmd->add_option("--lambda", cfg.params.lambda, "Atom-field coupling")->capture_default_str();
  run_cmd->add_option("--delta", cfg.params.delta, "Detuning omega_0 - omega (units of lambda)")->capture_default_str();
  run_cmd->add_option("--gamma", cfg.params.gamma, "Intrinsic-decoherence rate (units of lambda)")->capture_default_str();
  run_cmd->add_option("--tmax", cfg.t_max, "Final time (units of 1/lambda)")->capture_default_str();
  run_cmd->add_option("--steps", cfg.n_steps, "Number of grid points, including t = 0")->capture_default_str();
  run_cmd->add_option("--cutoff", cutoff, "Fock-space dimension")->capture_default_str();
  run_cmd->add_option("--method", method_name,
                      "closed-form | spectral | poisson | lindblad | schrodinger | full-oracle")
      ->capture_default_str();
  run_cmd->add_option("--observables", observables_arg, "Comma list of sigma_x, sigma_z, purity")
      ->capture_default_str();
  run_cmd->add_option("--dt", cfg.dt, "Step for the lindblad method (0 = 0.01/||H||)")->capture_default_str();
  run_cmd->add_option("--threads", cfg.threads, "Workers for time-grid evaluation")->capture_default_str();
  run_cmd->add_option("--out", out_path, "CSV output path")->capture_default_str();

  std::string fig_dir = "fig1";
  auto* fig_cmd = app.add_subcommand("fig1", "Write the three collapse/revival series and their metrics");
  fig_cmd->add_option("--out", fig_dir, "Output directory")->capture_default_str();

  std::string fault_name;
  auto* validate_cmd = app.add_subcommand("validate", "Run the cross-route consistency battery");
  validate_cmd->add_option("--inject-fault", fault_name, "Corrupt a route on purpose (propagator-u22)")
      ->group("");

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidConfig;
  }

  if (run_cmd->parsed()) {
    const auto method = parse_method(method_name);
    if (!method) {
      err << "error: unknown method '" << method_name << "'\n";
      return kExitInvalidConfig;
    }
    cfg.method = *method;
    cfg.observables.clear();
    std::stringstream list(observables_arg);
    for (std::string item; std::getline(list, item, ',');) {
      const auto obs = parse_observable(trim(item));
      if (!obs) {
        err << "error: unknown observable '" << item << "'\n";
        return kExitInvalidConfig;
      }
      cfg.observables.push_back(*obs);
    }
    try {
      cfg.params.cutoff = FockCutoff(cutoff);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return kExitInvalidConfig;
    }
    cfg.params.epsilon = Complex(eps_re, eps_im);
    cfg.params.alpha = Complex(alpha_re, alpha_im);
    cfg.out = out_path;
    return run(cfg, err);
  }

  if (fig_cmd->parsed()) {
    try {
      for (const PanelMetrics& m : fig1(fig_dir)) {
        out << "panel " << m.panel << ": revival_peak " << m.revival_peak << " at t = "
            << m.revival_time << ", collapse_floor " << m.collapse_floor << '\n';
      }
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return e.is_numerical_guard() ? kExitNumericalGuard : kExitInvalidConfig;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
    return kExitOk;
  }

  Fault fault = Fault::None;
  if (fault_name == "propagator-u22") {
    fault = Fault::PropagatorU22Sign;
  } else if (!fault_name.empty()) {
    err << "error: unknown fault '" << fault_name << "'\n";
    return kExitInvalidConfig;
  }
  return validate(out, fault);
}

}  // namespace twofield::cli
