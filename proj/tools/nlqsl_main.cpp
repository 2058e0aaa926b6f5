// nlqsl command-line front end. Drives the shared library exclusively
// through the public C interface.

#include <nlqsl/nlqsl.h>

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitNumericalAbort = 3;

int status_to_exit_code(nlqsl_status status) {
  switch (status) {
    case NLQSL_OK:
      return kExitOk;
    case NLQSL_ERR_INVALID_ARGUMENT:
    case NLQSL_ERR_DOMAIN:
      return kExitConfigError;
    default:
      return kExitNumericalAbort;
  }
}

struct ConfigHandle {
  nlqsl_scenario_config* cfg = nullptr;
  ~ConfigHandle() { nlqsl_scenario_config_free(cfg); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nlqsl: nonlinear Schroedinger quantum-speed-limit scenarios"};
  app.set_version_flag("--version", std::string(nlqsl_version()));
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand(
      "run", "Run a scenario (fig1..fig5 or custom) and write CSV data files");

  std::string scenario;
  std::string config_file;
  std::string out_dir;
  std::string kappa_list;
  int p = -1;
  int grid_n = 0;
  double dt = 0.0;

  run->add_option("scenario", scenario,
                  "Scenario id: fig1, fig2, fig3, fig4, fig5 or custom")
      ->required();
  run->add_option("--config", config_file,
                  "Flat key=value config file applied over the preset");
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--kappa", kappa_list,
                  "Comma-separated nonlinearity strengths");
  run->add_option("--p", p, "Nonlinearity order (0, 1 or 2)")
      ->check(CLI::Range(0, 2));
  run->add_option("--grid", grid_n, "Grid points (power of two, >= 16)");
  run->add_option("--dt", dt, "Time step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help / --version
      return app.exit(e);
    }
    app.exit(e);
    return kExitConfigError;
  }

  ConfigHandle handle;
  nlqsl_status status = nlqsl_scenario_config_create(scenario.c_str(),
                                                     &handle.cfg);
  // Config file first, then flags: flags win.
  if (status == NLQSL_OK && !config_file.empty()) {
    status = nlqsl_scenario_config_load_file(handle.cfg, config_file.c_str());
  }
  if (status == NLQSL_OK && !out_dir.empty()) {
    status = nlqsl_scenario_config_set(handle.cfg, "out", out_dir.c_str());
  }
  if (status == NLQSL_OK && !kappa_list.empty()) {
    status = nlqsl_scenario_config_set(handle.cfg, "kappa", kappa_list.c_str());
  }
  if (status == NLQSL_OK && run->count("--p") > 0) {
    status = nlqsl_scenario_config_set(handle.cfg, "p",
                                       std::to_string(p).c_str());
  }
  if (status == NLQSL_OK && run->count("--grid") > 0) {
    status = nlqsl_scenario_config_set(handle.cfg, "grid",
                                       std::to_string(grid_n).c_str());
  }
  if (status == NLQSL_OK && run->count("--dt") > 0) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", dt);
    status = nlqsl_scenario_config_set(handle.cfg, "dt", buf);
  }
  if (status != NLQSL_OK) {
    std::fprintf(stderr, "nlqsl: %s\n", nlqsl_last_error());
    return status_to_exit_code(status);
  }

  char manifest[4096] = {0};
  status = nlqsl_scenario_run(handle.cfg, manifest, sizeof(manifest));
  if (status != NLQSL_OK) {
    std::fprintf(stderr, "nlqsl: %s\n", nlqsl_last_error());
    return status_to_exit_code(status);
  }
  std::printf("wrote %s\n", manifest);
  return kExitOk;
}
