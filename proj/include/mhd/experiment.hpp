/// \file experiment.hpp
/// Experiment runner: configuration, drivers for each study, and CSV artifacts.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mhd/grid.hpp"
#include "mhd/integrate.hpp"
#include "mhd/problems.hpp"

namespace mhd {

/// Invalid or inconsistent run configuration (CLI exit code 2).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid state met while time stepping (CLI exit code 3).
class SolverBreakdown : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Experiment { Convergence, Conservation, Riemann, ShockTube2D, Rotor };
enum class GridKind { Uniform, Stretched };

struct RunConfig {
  Experiment experiment = Experiment::Convergence;
  ProblemId problem = ProblemId::Manufactured;
  FluxKind flux = FluxKind::EC;
  std::vector<std::size_t> cells;
  std::vector<double> cfl;
  GridKind grid = GridKind::Uniform;
  double ratio = 10.0;
  double gamma = 5.0 / 3.0;
  double t_final = 1.0;
  BoundaryKind bc = BoundaryKind::Periodic;
  RKScheme integrator = RKScheme::LSERK45;
  std::vector<double> output_times;  ///< snapshot times; the final time is always written
  std::string output_dir = ".";
  std::string reference;  ///< reference snapshot for riemann runs (optional)
  int threads = 0;        ///< 0 keeps the OpenMP default
};

using KeyValues = std::map<std::string, std::string>;

/// Recognized configuration keys; flag names mirror these.
const std::vector<std::string>& config_keys();

Experiment parse_experiment(const std::string& name);
std::string experiment_name(Experiment e);
FluxKind parse_flux(const std::string& name);
std::string flux_name(FluxKind k);

/// Applies experiment and problem defaults, then the given overrides. Throws ConfigError.
RunConfig make_run_config(const std::string& experiment, const KeyValues& values);

struct RunResult {
  std::vector<std::string> files;  ///< artifacts written, in order
};

/// Runs the study and writes CSVs into config.output_dir (created if missing).
/// Throws SolverBreakdown naming the cell and time on an invalid state.
RunResult run_experiment(const RunConfig& config);

/// Overlap-averages a uniform-grid snapshot onto the cells of grid.
std::vector<std::vector<double>> project_snapshot(const std::vector<double>& x,
                                                  const std::vector<std::vector<double>>& values,
                                                  double xmin, double xmax, const Grid1D& grid);

}  // namespace mhd
