#include "scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "box.hpp"
#include "propagator.hpp"
#include "qsl.hpp"
#include "version.hpp"

namespace nlqsl {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& v, const std::string& key) {
  std::size_t pos = 0;
  double out;
  try {
    out = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad numeric value for '" + key + "'");
  }
  if (pos != v.size()) {
    throw std::invalid_argument("config: bad numeric value for '" + key + "'");
  }
  return out;
}

int parse_int(const std::string& v, const std::string& key) {
  const double d = parse_double(v, key);
  const int i = static_cast<int>(d);
  if (static_cast<double>(i) != d) {
    throw std::invalid_argument("config: '" + key + "' must be an integer");
  }
  return i;
}

std::vector<double> parse_double_list(const std::string& v,
                                      const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_double(item, key));
  }
  if (out.empty()) {
    throw std::invalid_argument("config: empty list for '" + key + "'");
  }
  return out;
}

void validate(const ScenarioConfig& cfg) {
  const auto fail = [](const std::string& field) {
    throw std::invalid_argument("config: invalid value for '" + field + "'");
  };
  if (!(cfg.hbar > 0.0)) fail("hbar");
  if (!(cfg.mass > 0.0)) fail("mass");
  if (!(cfg.omega0 > 0.0)) fail("omega0");
  if (!(cfg.omega1 > 0.0)) fail("omega1");
  if (!(cfg.tau > 0.0)) fail("tau");
  if (!(cfg.lambda0 > 0.0)) fail("lambda0");
  if (cfg.kappas.empty()) fail("kappa");
  for (double k : cfg.kappas) {
    if (k < 0.0) fail("kappa");
  }
  if (cfg.p < 0 || cfg.p > 2) fail("p");
  if (!(cfg.x_max > cfg.x_min)) fail("x_max");
  if (cfg.n_points < 16 || (cfg.n_points & (cfg.n_points - 1)) != 0) {
    fail("grid");
  }
  if (!(cfg.dt > 0.0)) fail("dt");
  if (cfg.samples < 100) fail("samples");
  if (cfg.sweep_points < 2) fail("sweep_points");
  if (!(cfg.sweep_kappa_max > 0.0)) fail("sweep_kappa_max");
  if (!(cfg.box_t_max > 0.0)) fail("box_t_max");
  if (cfg.out_dir.empty()) fail("out");
}

int thread_budget(std::size_t n_tasks) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (const char* env = std::getenv("NLQSL_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) workers = static_cast<unsigned>(cap);
  }
  return static_cast<int>(std::min<std::size_t>(workers, n_tasks));
}

/// Runs tasks[0..n) on up to thread_budget(n) workers. Tasks must be
/// independent; exceptions are rethrown on the caller thread.
void run_parallel(std::vector<std::function<void()>>& tasks) {
  const int workers = thread_budget(tasks.size());
  if (workers <= 1) {
    for (auto& t : tasks) t();
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(tasks.size());
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) return;
        try {
          tasks[i]();
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt_tag(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

class CsvFile {
 public:
  CsvFile(const std::filesystem::path& path, const std::string& header)
      : out_(path) {
    if (!out_) {
      throw std::runtime_error("cannot open output file " + path.string());
    }
    out_ << header << "\n";
  }

  void row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out_ << ",";
      out_ << fmt(values[i]);
    }
    out_ << "\n";
  }

 private:
  std::ofstream out_;
};

struct CurveData {
  std::string file;
  std::string header;
  std::vector<std::vector<double>> rows;
};

struct ScenarioContext {
  const ScenarioConfig& cfg;
  SpatialGrid grid;
  std::vector<CurveData> curves;

  explicit ScenarioContext(const ScenarioConfig& c)
      : cfg(c), grid(c.x_min, c.x_max, static_cast<std::size_t>(c.n_points)) {}
};

NonlinearitySpec make_nl(int p, double kappa) {
  return (kappa == 0.0) ? NonlinearitySpec(0, 0.0) : NonlinearitySpec(p, kappa);
}

Trajectory run_oscillator(const ScenarioContext& ctx, int p, double kappa,
                          double t_final, int sample_every) {
  const ScenarioConfig& c = ctx.cfg;
  const HarmonicRamp ramp(c.omega0, c.omega1, c.tau);
  const PotentialFn U = make_harmonic_potential(ramp, c.mass);
  const WaveFunction psi0 =
      ground_state_gaussian(ctx.grid, c.mass, c.omega0, c.hbar);
  return propagate(psi0, U, make_nl(p, kappa), t_final, c.dt, sample_every);
}

int trace_sampling(const ScenarioConfig& c, double t_final) {
  const long long n_steps = std::llround(t_final / c.dt);
  return static_cast<int>(
      std::max<long long>(1, n_steps / static_cast<long long>(c.samples)));
}

CurveData wave_curve(const ScenarioContext& ctx, const std::string& file,
                     int p, double kappa) {
  const Trajectory traj =
      run_oscillator(ctx, p, kappa, ctx.cfg.tau, 1 << 30);
  const WaveFunction& psi = traj.final_state();
  CurveData out;
  out.file = file;
  out.header = "x,abs_psi,re_psi,im_psi";
  out.rows.reserve(psi.grid.size());
  for (std::size_t j = 0; j < psi.grid.size(); ++j) {
    const Complex a = psi.amplitudes[j];
    out.rows.push_back({psi.grid.x(j), std::abs(a), a.real(), a.imag()});
  }
  return out;
}

CurveData trace_curve(const ScenarioContext& ctx, const std::string& file,
                      int p, double kappa) {
  const ScenarioConfig& c = ctx.cfg;
  const Trajectory traj = run_oscillator(ctx, p, kappa, c.tau,
                                         trace_sampling(c, c.tau));
  const HarmonicRamp ramp(c.omega0, c.omega1, c.tau);
  const QslTrace trace =
      qsl_trace(traj, make_harmonic_potential(ramp, c.mass), make_nl(p, kappa));
  CurveData out;
  out.file = file;
  out.header = "t,v_qsl";
  out.rows.reserve(trace.times.size());
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    out.rows.push_back({trace.times[i], trace.v_qsl[i]});
  }
  return out;
}

double qsl_at_half_tau(const ScenarioContext& ctx, int p, double kappa) {
  const ScenarioConfig& c = ctx.cfg;
  const double t_half = 0.5 * c.tau;
  const Trajectory traj = run_oscillator(ctx, p, kappa, t_half, 1 << 30);
  const HarmonicRamp ramp(c.omega0, c.omega1, c.tau);
  return qsl_numeric(traj.final_state(),
                     make_harmonic_potential(ramp, c.mass), t_half,
                     make_nl(p, kappa));
}

std::vector<double> sweep_kappas(const ScenarioConfig& c) {
  std::vector<double> ks(c.sweep_points);
  for (int i = 0; i < c.sweep_points; ++i) {
    ks[i] = c.sweep_kappa_max * static_cast<double>(i) /
            static_cast<double>(c.sweep_points - 1);
  }
  return ks;
}

void scenario_fig1(ScenarioContext& ctx) {
  ctx.curves.resize(ctx.cfg.kappas.size());
  std::vector<std::function<void()>> tasks;
  for (std::size_t i = 0; i < ctx.cfg.kappas.size(); ++i) {
    tasks.push_back([&ctx, i] {
      const double kappa = ctx.cfg.kappas[i];
      ctx.curves[i] = wave_curve(
          ctx, "fig1_wave_kappa" + fmt_tag(kappa) + ".csv", ctx.cfg.p, kappa);
    });
  }
  run_parallel(tasks);
}

void scenario_fig2(ScenarioContext& ctx) {
  const auto ks = sweep_kappas(ctx.cfg);
  ctx.curves.resize(ctx.cfg.kappas.size() + 1);
  std::vector<double> sweep(ks.size());

  std::vector<std::function<void()>> tasks;
  for (std::size_t i = 0; i < ctx.cfg.kappas.size(); ++i) {
    tasks.push_back([&ctx, i] {
      const double kappa = ctx.cfg.kappas[i];
      ctx.curves[i] = trace_curve(
          ctx, "fig2_trace_kappa" + fmt_tag(kappa) + ".csv", ctx.cfg.p, kappa);
    });
  }
  for (std::size_t i = 0; i < ks.size(); ++i) {
    tasks.push_back(
        [&ctx, &ks, &sweep, i] { sweep[i] = qsl_at_half_tau(ctx, ctx.cfg.p, ks[i]); });
  }
  run_parallel(tasks);

  CurveData& sc = ctx.curves.back();
  sc.file = "fig2_sweep.csv";
  sc.header = "kappa,v_qsl";
  for (std::size_t i = 0; i < ks.size(); ++i) sc.rows.push_back({ks[i], sweep[i]});
}

void scenario_fig3(ScenarioContext& ctx) {
  const ScenarioConfig& c = ctx.cfg;
  const std::vector<std::pair<BoxMode, std::string>> modes = {
      {BoxMode::Exact, "exact"}, {BoxMode::Perturbative, "perturbative"}};
  for (const auto& [mode, tag] : modes) {
    for (double kappa : c.kappas) {
      CurveData curve;
      curve.file = "fig3_trace_" + tag + "_kappa" + fmt_tag(kappa) + ".csv";
      curve.header = "t,v_qsl,term_mu,term_x2,term_x4,term_p2";
      for (int i = 0; i <= c.samples; ++i) {
        const double t =
            c.box_t_max * static_cast<double>(i) / static_cast<double>(c.samples);
        const QslTerms q =
            qsl_box(kappa, c.lambda0, c.v, t, c.mass, c.hbar, mode);
        curve.rows.push_back(
            {t, q.total, q.term_mu, q.term_x2, q.term_x4, q.term_p2});
      }
      ctx.curves.push_back(std::move(curve));
    }
  }
  const std::vector<double> sweep_ts = {0.0, 0.5 * c.box_t_max, c.box_t_max};
  for (const auto& [mode, tag] : modes) {
    CurveData curve;
    curve.file = "fig3_sweep_" + tag + ".csv";
    curve.header = "kappa,v_qsl_t0,v_qsl_t1,v_qsl_t2";
    const double kmax = *std::max_element(c.kappas.begin(), c.kappas.end());
    for (int i = 0; i < c.sweep_points; ++i) {
      const double kappa =
          kmax * static_cast<double>(i) / static_cast<double>(c.sweep_points - 1);
      std::vector<double> row = {kappa};
      for (double t : sweep_ts) {
        row.push_back(
            qsl_box(kappa, c.lambda0, c.v, t, c.mass, c.hbar, mode).total);
      }
      curve.rows.push_back(std::move(row));
    }
    ctx.curves.push_back(std::move(curve));
  }
}

std::vector<std::pair<int, double>> comparison_cases(const ScenarioConfig& c) {
  // Linear reference plus the cubic and quintic runs at the configured
  // coupling (the presets use the largest kappa in the list).
  const double kappa = *std::max_element(c.kappas.begin(), c.kappas.end());
  return {{0, 0.0}, {1, kappa}, {2, kappa}};
}

void scenario_fig4(ScenarioContext& ctx) {
  const auto cases = comparison_cases(ctx.cfg);
  ctx.curves.resize(cases.size());
  std::vector<std::function<void()>> tasks;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    tasks.push_back([&ctx, &cases, i] {
      const auto [p, kappa] = cases[i];
      ctx.curves[i] = wave_curve(ctx,
                                 "fig4_wave_p" + std::to_string(p) + "_kappa" +
                                     fmt_tag(kappa) + ".csv",
                                 p, kappa);
    });
  }
  run_parallel(tasks);
}

void scenario_fig5(ScenarioContext& ctx) {
  const auto cases = comparison_cases(ctx.cfg);
  const auto ks = sweep_kappas(ctx.cfg);
  ctx.curves.resize(cases.size() + 1);
  std::vector<double> sweep_p1(ks.size());
  std::vector<double> sweep_p2(ks.size());

  std::vector<std::function<void()>> tasks;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    tasks.push_back([&ctx, &cases, i] {
      const auto [p, kappa] = cases[i];
      ctx.curves[i] = trace_curve(ctx,
                                  "fig5_trace_p" + std::to_string(p) +
                                      "_kappa" + fmt_tag(kappa) + ".csv",
                                  p, kappa);
    });
  }
  for (std::size_t i = 0; i < ks.size(); ++i) {
    tasks.push_back([&ctx, &ks, &sweep_p1, i] {
      sweep_p1[i] = qsl_at_half_tau(ctx, 1, ks[i]);
    });
    tasks.push_back([&ctx, &ks, &sweep_p2, i] {
      sweep_p2[i] = qsl_at_half_tau(ctx, 2, ks[i]);
    });
  }
  run_parallel(tasks);

  CurveData& sc = ctx.curves.back();
  sc.file = "fig5_sweep.csv";
  sc.header = "kappa,v_qsl_p1,v_qsl_p2";
  for (std::size_t i = 0; i < ks.size(); ++i) {
    sc.rows.push_back({ks[i], sweep_p1[i], sweep_p2[i]});
  }
}

void scenario_custom(ScenarioContext& ctx) {
  ctx.curves.resize(2 * ctx.cfg.kappas.size());
  std::vector<std::function<void()>> tasks;
  for (std::size_t i = 0; i < ctx.cfg.kappas.size(); ++i) {
    tasks.push_back([&ctx, i] {
      const double kappa = ctx.cfg.kappas[i];
      const std::string tag =
          "_p" + std::to_string(ctx.cfg.p) + "_kappa" + fmt_tag(kappa);
      ctx.curves[2 * i] =
          trace_curve(ctx, "custom_trace" + tag + ".csv", ctx.cfg.p, kappa);
      ctx.curves[2 * i + 1] =
          wave_curve(ctx, "custom_wave" + tag + ".csv", ctx.cfg.p, kappa);
    });
  }
  run_parallel(tasks);
}

nlohmann::ordered_json manifest_json(const ScenarioConfig& c,
                                     const std::vector<CurveData>& curves) {
  nlohmann::ordered_json j;
  j["scenario"] = c.scenario;
  j["version"] = kVersion;
  j["parameters"] = {{"hbar", c.hbar},     {"mass", c.mass},
                     {"omega0", c.omega0}, {"omega1", c.omega1},
                     {"tau", c.tau},       {"lambda0", c.lambda0},
                     {"v", c.v},           {"kappa", c.kappas},
                     {"p", c.p}};
  j["numerics"] = {{"x_min", c.x_min},
                   {"x_max", c.x_max},
                   {"n_points", c.n_points},
                   {"dt", c.dt},
                   {"samples", c.samples},
                   {"sweep_points", c.sweep_points},
                   {"sweep_kappa_max", c.sweep_kappa_max},
                   {"box_t_max", c.box_t_max},
                   {"scaling_exponent", 0.5}};
  j["outputs"] = nlohmann::ordered_json::array();
  for (const auto& curve : curves) j["outputs"].push_back(curve.file);
  return j;
}

}  // namespace

ScenarioConfig default_config(const std::string& scenario_id) {
  ScenarioConfig cfg;
  cfg.scenario = scenario_id;
  if (scenario_id == "fig1" || scenario_id == "fig2") {
    cfg.kappas = {0.0, 5.0, 10.0};
  } else if (scenario_id == "fig3") {
    cfg.kappas = {0.0, 0.25, 0.5};
    cfg.sweep_kappa_max = 0.5;
  } else if (scenario_id == "fig4" || scenario_id == "fig5") {
    cfg.kappas = {10.0};
  } else if (scenario_id == "custom") {
    cfg.kappas = {1.0};
  } else {
    throw std::invalid_argument("unknown scenario '" + scenario_id + "'");
  }
  return cfg;
}

void apply_key_value(ScenarioConfig& cfg, const std::string& key,
                     const std::string& value) {
  if (key == "scenario") {
    // Re-derive the preset, then keep applying overrides on top of it.
    cfg = default_config(value);
  } else if (key == "hbar") {
    cfg.hbar = parse_double(value, key);
  } else if (key == "mass" || key == "m") {
    cfg.mass = parse_double(value, key);
  } else if (key == "omega0") {
    cfg.omega0 = parse_double(value, key);
  } else if (key == "omega1") {
    cfg.omega1 = parse_double(value, key);
  } else if (key == "tau") {
    cfg.tau = parse_double(value, key);
  } else if (key == "lambda0") {
    cfg.lambda0 = parse_double(value, key);
  } else if (key == "v") {
    cfg.v = parse_double(value, key);
  } else if (key == "kappa") {
    cfg.kappas = parse_double_list(value, key);
  } else if (key == "p") {
    cfg.p = parse_int(value, key);
  } else if (key == "x_min") {
    cfg.x_min = parse_double(value, key);
  } else if (key == "x_max") {
    cfg.x_max = parse_double(value, key);
  } else if (key == "grid" || key == "n_points") {
    cfg.n_points = parse_int(value, key);
  } else if (key == "dt") {
    cfg.dt = parse_double(value, key);
  } else if (key == "samples") {
    cfg.samples = parse_int(value, key);
  } else if (key == "sweep_points") {
    cfg.sweep_points = parse_int(value, key);
  } else if (key == "sweep_kappa_max") {
    cfg.sweep_kappa_max = parse_double(value, key);
  } else if (key == "box_t_max") {
    cfg.box_t_max = parse_double(value, key);
  } else if (key == "out") {
    cfg.out_dir = value;
  } else {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

void load_config_file(ScenarioConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("config: cannot open file '" + path + "'");
  }
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  " is not key=value");
    }
    apply_key_value(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

RunResult run_scenario(const ScenarioConfig& cfg) {
  validate(cfg);
  ScenarioContext ctx(cfg);

  if (cfg.scenario == "fig1") {
    scenario_fig1(ctx);
  } else if (cfg.scenario == "fig2") {
    scenario_fig2(ctx);
  } else if (cfg.scenario == "fig3") {
    scenario_fig3(ctx);
  } else if (cfg.scenario == "fig4") {
    scenario_fig4(ctx);
  } else if (cfg.scenario == "fig5") {
    scenario_fig5(ctx);
  } else if (cfg.scenario == "custom") {
    scenario_custom(ctx);
  } else {
    throw std::invalid_argument("unknown scenario '" + cfg.scenario + "'");
  }

  const std::filesystem::path dir(cfg.out_dir);
  std::filesystem::create_directories(dir);

  RunResult result;
  for (const CurveData& curve : ctx.curves) {
    const auto path = dir / curve.file;
    CsvFile csv(path, curve.header);
    for (const auto& row : curve.rows) csv.row(row);
    result.files.push_back(path.string());
  }

  const auto manifest_path = dir / "manifest.json";
  std::ofstream mf(manifest_path);
  if (!mf) {
    throw std::runtime_error("cannot open output file " +
                             manifest_path.string());
  }
  mf << manifest_json(cfg, ctx.curves).dump(2) << "\n";
  result.manifest_path = manifest_path.string();
  return result;
}

}  // namespace nlqsl
