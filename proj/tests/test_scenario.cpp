#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "scenario.hpp"

using namespace nlqsl;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag)
      : path(fs::temp_directory_path() / ("nlqsl_" + tag)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) {
    if (c == '\n') ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("scenario presets") {
  CHECK(default_config("fig1").kappas == std::vector<double>{0.0, 5.0, 10.0});
  CHECK(default_config("fig2").sweep_kappa_max == 10.0);
  CHECK(default_config("fig3").kappas ==
        std::vector<double>{0.0, 0.25, 0.5});
  CHECK(default_config("fig5").kappas == std::vector<double>{10.0});
  CHECK(default_config("custom").p == 1);
  CHECK_THROWS_AS(default_config("fig9"), std::invalid_argument);
}

TEST_CASE("key=value overrides") {
  ScenarioConfig cfg = default_config("custom");
  apply_key_value(cfg, "kappa", "0, 2.5,10");
  CHECK(cfg.kappas == std::vector<double>{0.0, 2.5, 10.0});
  apply_key_value(cfg, "p", "2");
  CHECK(cfg.p == 2);
  apply_key_value(cfg, "grid", "512");
  CHECK(cfg.n_points == 512);
  apply_key_value(cfg, "dt", "2e-4");
  CHECK(cfg.dt == 2e-4);
  apply_key_value(cfg, "out", "some/dir");
  CHECK(cfg.out_dir == "some/dir");

  CHECK_THROWS_AS(apply_key_value(cfg, "bogus", "1"), std::invalid_argument);
  CHECK_THROWS_AS(apply_key_value(cfg, "dt", "fast"), std::invalid_argument);
  CHECK_THROWS_AS(apply_key_value(cfg, "p", "1.5"), std::invalid_argument);
  CHECK_THROWS_AS(apply_key_value(cfg, "kappa", ""), std::invalid_argument);
}

TEST_CASE("config file loading") {
  TempDir dir("cfgfile");
  const fs::path file = dir.path / "run.cfg";
  {
    std::ofstream out(file);
    out << "# comment line\n"
        << "kappa = 1,2\n"
        << "p = 2\n"
        << "dt = 5e-4   # trailing comment\n"
        << "\n";
  }
  ScenarioConfig cfg = default_config("custom");
  load_config_file(cfg, file.string());
  CHECK(cfg.kappas == std::vector<double>{1.0, 2.0});
  CHECK(cfg.p == 2);
  CHECK(cfg.dt == 5e-4);

  const fs::path bad = dir.path / "bad.cfg";
  {
    std::ofstream out(bad);
    out << "this is not a key value line\n";
  }
  CHECK_THROWS_AS(load_config_file(cfg, bad.string()), std::invalid_argument);
  CHECK_THROWS_AS(load_config_file(cfg, (dir.path / "missing.cfg").string()),
                  std::invalid_argument);
}

TEST_CASE("invalid configs are rejected with the field name") {
  ScenarioConfig cfg = default_config("custom");
  cfg.n_points = 300;  // not a power of two
  CHECK_THROWS_WITH_AS(run_scenario(cfg), "config: invalid value for 'grid'",
                       std::invalid_argument);
  cfg = default_config("custom");
  cfg.p = 5;
  CHECK_THROWS_AS(run_scenario(cfg), std::invalid_argument);
  cfg = default_config("custom");
  cfg.kappas = {-1.0};
  CHECK_THROWS_AS(run_scenario(cfg), std::invalid_argument);
}

TEST_CASE("custom scenario produces trace, wave and manifest") {
  TempDir dir("custom_run");
  ScenarioConfig cfg = default_config("custom");
  cfg.n_points = 256;
  cfg.dt = 2e-4;
  cfg.samples = 100;
  cfg.kappas = {1.0};
  cfg.p = 2;
  cfg.out_dir = (dir.path / "out").string();
  const RunResult result = run_scenario(cfg);
  REQUIRE(result.files.size() == 2);

  const std::string trace = slurp(result.files[0]);
  CHECK(trace.rfind("t,v_qsl\n", 0) == 0);
  CHECK(count_lines(trace) == 102);  // header + samples + 1 rows

  const std::string wave = slurp(result.files[1]);
  CHECK(wave.rfind("x,abs_psi,re_psi,im_psi\n", 0) == 0);
  CHECK(count_lines(wave) == 257);

  // every speed is finite and nonnegative
  std::istringstream lines(trace);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    const auto comma = line.find(',');
    const double v = std::stod(line.substr(comma + 1));
    CHECK(v >= 0.0);
    CHECK(std::isfinite(v));
  }

  const auto manifest = nlohmann::json::parse(slurp(result.manifest_path));
  CHECK(manifest["scenario"] == "custom");
  CHECK(manifest["parameters"]["p"] == 2);
  CHECK(manifest["parameters"]["kappa"][0] == 1.0);
  CHECK(manifest["numerics"]["n_points"] == 256);
  CHECK(manifest["outputs"].size() == 2);
  CHECK(manifest.contains("version"));
}

TEST_CASE("fig3 emits six curves plus two sweeps, deterministically") {
  TempDir dir("fig3_run");
  ScenarioConfig cfg = default_config("fig3");
  cfg.samples = 100;
  cfg.sweep_points = 11;
  cfg.out_dir = (dir.path / "a").string();
  const RunResult first = run_scenario(cfg);
  REQUIRE(first.files.size() == 8);  // 3 kappa x 2 modes + 2 sweeps

  cfg.out_dir = (dir.path / "b").string();
  const RunResult second = run_scenario(cfg);
  REQUIRE(second.files.size() == first.files.size());
  for (std::size_t i = 0; i < first.files.size(); ++i) {
    CHECK(fs::path(first.files[i]).filename() ==
          fs::path(second.files[i]).filename());
    CHECK(slurp(first.files[i]) == slurp(second.files[i]));
  }
  CHECK(slurp(first.manifest_path) == slurp(second.manifest_path));

  const std::string trace = slurp(first.files[0]);
  CHECK(trace.rfind("t,v_qsl,term_mu,term_x2,term_x4,term_p2\n", 0) == 0);
}

TEST_CASE("parallel and serial runs emit identical bytes") {
  TempDir dir("threads");
  ScenarioConfig cfg = default_config("custom");
  cfg.n_points = 256;
  cfg.dt = 2e-4;
  cfg.samples = 100;
  cfg.kappas = {0.5, 1.0};

  setenv("NLQSL_THREADS", "1", 1);
  cfg.out_dir = (dir.path / "serial").string();
  const RunResult serial = run_scenario(cfg);
  setenv("NLQSL_THREADS", "4", 1);
  cfg.out_dir = (dir.path / "parallel").string();
  const RunResult parallel = run_scenario(cfg);
  unsetenv("NLQSL_THREADS");

  REQUIRE(serial.files.size() == 4);
  REQUIRE(parallel.files.size() == serial.files.size());
  for (std::size_t i = 0; i < serial.files.size(); ++i) {
    CHECK(slurp(serial.files[i]) == slurp(parallel.files[i]));
  }
}

TEST_CASE("csv floats round-trip at 17 significant digits") {
  TempDir dir("roundtrip");
  ScenarioConfig cfg = default_config("fig3");
  cfg.samples = 100;
  cfg.sweep_points = 3;
  cfg.kappas = {0.25};
  cfg.out_dir = (dir.path / "out").string();
  const RunResult result = run_scenario(cfg);

  std::istringstream lines(slurp(result.files[0]));
  std::string header, first_row;
  std::getline(lines, header);
  std::getline(lines, first_row);
  std::istringstream fields(first_row);
  std::string t_field, v_field;
  std::getline(fields, t_field, ',');
  std::getline(fields, v_field, ',');
  const double v = std::stod(v_field);
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  CHECK(v_field == buf);  // lossless rendering
}
