// Command-line experiment runner.
//   mhd-esfv <experiment> --config <file> [--key value ...]
// Exit codes: 0 ok, 2 configuration error, 3 solver breakdown.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "mhd/experiment.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitBreakdown = 3;
constexpr const char* kOutputEnv = "MHD_ESFV_OUTPUT_DIR";

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? "," : "") + items[i];
  return out;
}

mhd::KeyValues read_config(const std::string& path) {
  mhd::KeyValues kv;
  for (const CLI::ConfigItem& item : CLI::ConfigTOML().from_file(path)) {
    if (!item.parents.empty()) {
      throw mhd::ConfigError("config sections are not supported: " + item.fullname());
    }
    kv[item.name] = join(item.inputs);
  }
  return kv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropy stable finite volume solver for the ideal MHD equations"};
  std::string experiment;
  std::string config_path;
  app.add_option("experiment", experiment,
                 "convergence | conservation | riemann | shocktube2d | rotor")
      ->required();
  app.add_option("--config", config_path, "flat key=value configuration file");

  std::map<std::string, std::string> flags;
  std::map<std::string, CLI::Option*> options;
  for (const std::string& key : mhd::config_keys()) {
    options[key] = app.add_option("--" + key, flags[key], "overrides '" + key + "' from the config");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    mhd::KeyValues kv;
    if (!config_path.empty()) kv = read_config(config_path);
    if (const char* env = std::getenv(kOutputEnv); env != nullptr && *env != '\0') {
      kv["output_dir"] = env;
    }
    for (const auto& [key, opt] : options) {
      if (opt->count() > 0) kv[key] = flags[key];
    }
    const mhd::RunConfig config = mhd::make_run_config(experiment, kv);
    const mhd::RunResult result = mhd::run_experiment(config);
    for (const std::string& f : result.files) std::cout << f << '\n';
    return 0;
  } catch (const mhd::SolverBreakdown& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBreakdown;
  } catch (const mhd::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const CLI::FileError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const CLI::ParseError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
