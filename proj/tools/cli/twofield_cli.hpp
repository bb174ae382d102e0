#pragma once

// Command-line front end: `run`, `fig1` and `validate`.
//
// Exit codes: 0 success, 2 invalid configuration, 3 numerical guard
// (cutoff, Poisson window, step size) violated, 4 validation mismatch.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twofield/params.hpp"

namespace twofield::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitNumericalGuard = 3;
inline constexpr int kExitValidationMismatch = 4;

enum class Method { ClosedForm, Spectral, Poisson, Lindblad, Schrodinger, FullOracle };
enum class Observable { SigmaX, SigmaZ, Purity };

std::optional<Method> parse_method(std::string_view name);
std::string_view to_string(Method m);
std::optional<Observable> parse_observable(std::string_view name);
std::string_view to_string(Observable o);

struct RunConfig {
  SystemParams params;
  double t_max = 12.0;
  int n_steps = 1200;
  Method method = Method::ClosedForm;
  std::filesystem::path out = "sigma_x.csv";
  std::vector<Observable> observables{Observable::SigmaX};
  double dt = 0.0;  // lindblad step; 0 selects 0.01/||H||
  unsigned threads = 1;
};

/// One time column plus one column per requested observable.
struct RunTable {
  std::vector<double> t;
  std::vector<Observable> observables;
  std::vector<std::vector<double>> columns;
};

/// Evaluates the configured method on the uniform grid. Throws
/// twofield::Error.
RunTable compute(const RunConfig& cfg);

/// Comma-separated rows, header `t,<observables>`, fixed 15-decimal values,
/// LF endings. Throws NumericalFailure on non-finite values.
std::string format_csv(const RunTable& table);

/// Formats one value the way the CSV does.
std::string format_value(double v);

/// compute() + write CSV and a `<out>.meta.json` sidecar. Nothing is written
/// on failure. Returns an exit code.
int run(const RunConfig& cfg, std::ostream& err);

struct PanelMetrics {
  char panel = 'a';
  double collapse_floor = 0.0;
  double revival_peak = 0.0;
  double revival_time = 0.0;
};

/// Writes fig1a.csv, fig1b.csv, fig1c.csv (t in [0, 12], 2400 points,
/// closed form) and fig1_metrics.json into `dir`.
std::vector<PanelMetrics> fig1(const std::filesystem::path& dir);

enum class Fault { None, PropagatorU22Sign };

/// Cross-route battery at reduced sizes. Prints one line per check; returns
/// 0 when every check passes, 4 otherwise. `fault` corrupts one route to
/// confirm the battery notices.
int validate(std::ostream& out, Fault fault = Fault::None);

/// Full command line, as used by main().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twofield::cli
