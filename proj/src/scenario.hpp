#pragma once

#include <string>
#include <vector>

namespace nlqsl {

/// Everything a scenario run needs: physics parameters, numerics, output
/// location. Scenario ids select bundled parameter presets (fig1..fig5);
/// "custom" runs a single parametric-oscillator study from the fields as
/// given. All outputs are plain CSV plus a JSON manifest, rendered with 17
/// significant digits so reruns are byte-identical.
struct ScenarioConfig {
  std::string scenario = "custom";

  // physics
  double hbar = 1.0;
  double mass = 1.0;
  double omega0 = 5.0;  // angular frequencies; the presets use hbar = 1
  double omega1 = 1.0;
  double tau = 2.0;
  double lambda0 = 1.0;
  double v = 1.0;
  std::vector<double> kappas = {1.0};
  int p = 1;

  // numerics (frozen preset defaults keep golden outputs stable)
  double x_min = -8.0;
  double x_max = 8.0;
  int n_points = 1024;
  double dt = 1e-4;
  int samples = 200;       // trace rows = samples + 1
  int sweep_points = 21;
  double sweep_kappa_max = 10.0;
  double box_t_max = 1.0;

  std::string out_dir = "out";
};

/// Preset for a scenario id; throws std::invalid_argument on unknown ids.
ScenarioConfig default_config(const std::string& scenario_id);

/// Applies one key=value override (same keys as the config file format).
/// Throws std::invalid_argument on unknown keys or unparsable values.
void apply_key_value(ScenarioConfig& cfg, const std::string& key,
                     const std::string& value);

/// Flat key=value config file; '#' starts a comment. Values loaded on top
/// of the given base config.
void load_config_file(ScenarioConfig& cfg, const std::string& path);

struct RunResult {
  std::vector<std::string> files;  // paths of all emitted CSV files
  std::string manifest_path;
};

/// Runs the scenario and writes its data files and manifest under
/// cfg.out_dir. Independent kappa values run in parallel, capped by the
/// NLQSL_THREADS environment variable; file writes happen after all
/// computation, in a fixed order, so outputs are deterministic.
RunResult run_scenario(const ScenarioConfig& cfg);

}  // namespace nlqsl
