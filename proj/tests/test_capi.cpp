#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlqsl/nlqsl.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

namespace fs = std::filesystem;

TEST_CASE("version and error reporting") {
  CHECK(std::strlen(nlqsl_version()) > 0);
  nlqsl_grid* grid = nullptr;
  CHECK(nlqsl_grid_create(1.0, -1.0, 64, &grid) ==
        NLQSL_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(nlqsl_last_error()) > 0);
  CHECK(grid == nullptr);
}

TEST_CASE("grid and state lifecycle") {
  nlqsl_grid* grid = nullptr;
  REQUIRE(nlqsl_grid_create(-8.0, 8.0, 1024, &grid) == NLQSL_OK);
  CHECK(nlqsl_grid_size(grid) == 1024);
  CHECK(nlqsl_grid_dx(grid) == doctest::Approx(16.0 / 1024));
  std::vector<double> xs(1024);
  REQUIRE(nlqsl_grid_points(grid, xs.data(), xs.size()) == NLQSL_OK);
  CHECK(xs.front() == -8.0);

  nlqsl_state* psi = nullptr;
  REQUIRE(nlqsl_state_gaussian_ground(grid, 1.0, 5.0, 1.0, &psi) == NLQSL_OK);
  double nrm = 0.0;
  REQUIRE(nlqsl_norm(psi, &nrm) == NLQSL_OK);
  CHECK(nrm == doctest::Approx(1.0).epsilon(1e-10));

  double x2 = 0.0, p2 = 0.0;
  int warn = -1;
  REQUIRE(nlqsl_moment_x(psi, 2, &x2) == NLQSL_OK);
  REQUIRE(nlqsl_moment_p2(psi, &p2, &warn) == NLQSL_OK);
  CHECK(x2 == doctest::Approx(0.1).epsilon(1e-8));
  CHECK(p2 == doctest::Approx(2.5).epsilon(1e-6));
  CHECK(warn == 0);

  // round-trip through raw amplitudes
  std::vector<double> re(1024), im(1024);
  REQUIRE(nlqsl_state_amplitudes(psi, re.data(), im.data(), re.size()) ==
          NLQSL_OK);
  nlqsl_state* copy = nullptr;
  REQUIRE(nlqsl_state_create(grid, re.data(), im.data(), 1.0, 1.0, &copy) ==
          NLQSL_OK);
  double dist = -1.0;
  REQUIRE(nlqsl_l2_distance(psi, copy, &dist) == NLQSL_OK);
  CHECK(dist == 0.0);

  nlqsl_state_free(copy);
  nlqsl_state_free(psi);
  nlqsl_grid_free(grid);
}

TEST_CASE("runtime failures map to the numerical status") {
  nlqsl_grid* grid = nullptr;
  REQUIRE(nlqsl_grid_create(-8.0, 8.0, 64, &grid) == NLQSL_OK);
  std::vector<double> re(64, 1.0);
  re[5] = std::nan("");
  nlqsl_state* psi = nullptr;
  REQUIRE(nlqsl_state_create(grid, re.data(), nullptr, 1.0, 1.0, &psi) ==
          NLQSL_OK);
  double out = 0.0;
  CHECK(nlqsl_norm(psi, &out) == NLQSL_ERR_NUMERICAL);
  CHECK(std::string(nlqsl_last_error()) == "non-finite state");
  nlqsl_state_free(psi);
  nlqsl_grid_free(grid);
}

TEST_CASE("special functions through the C surface") {
  double out = 0.0;
  REQUIRE(nlqsl_elliptic_k(0.0, &out) == NLQSL_OK);
  CHECK(out == doctest::Approx(M_PI / 2.0).epsilon(1e-15));
  REQUIRE(nlqsl_elliptic_k(0.5, &out) == NLQSL_OK);
  CHECK(out == doctest::Approx(1.8540746773013717).epsilon(1e-12));
  CHECK(nlqsl_elliptic_k(1.0, &out) == NLQSL_ERR_DOMAIN);
  REQUIRE(nlqsl_jacobi_sn(0.7, 0.0, &out) == NLQSL_OK);
  CHECK(out == doctest::Approx(std::sin(0.7)).epsilon(1e-12));
  REQUIRE(nlqsl_jacobi_sn_series(0.7, 0.01, &out) == NLQSL_OK);
}

TEST_CASE("propagation, trace and qsl through handles") {
  nlqsl_grid* grid = nullptr;
  REQUIRE(nlqsl_grid_create(-8.0, 8.0, 512, &grid) == NLQSL_OK);
  nlqsl_state* psi0 = nullptr;
  REQUIRE(nlqsl_state_gaussian_ground(grid, 1.0, 5.0, 1.0, &psi0) == NLQSL_OK);

  const nlqsl_potential_spec ramp{NLQSL_POTENTIAL_HARMONIC_RAMP, 5.0, 1.0,
                                  2.0, 0.0, 0.0, 0.0};
  const nlqsl_nonlinearity cubic{1, 5.0};

  double u = 0.0;
  REQUIRE(nlqsl_potential_eval(&ramp, 1.0, 1.0, 0.0, &u) == NLQSL_OK);
  CHECK(u == doctest::Approx(12.5));

  double v0 = 0.0;
  const nlqsl_nonlinearity lin{0, 0.0};
  REQUIRE(nlqsl_qsl_numeric(psi0, &ramp, 0.0, &lin, &v0) == NLQSL_OK);
  CHECK(v0 == doctest::Approx(6.25).epsilon(1e-9));

  nlqsl_trajectory* traj = nullptr;
  REQUIRE(nlqsl_propagate(psi0, &ramp, &cubic, 0.2, 2e-4, 100, &traj) ==
          NLQSL_OK);
  const size_t count = nlqsl_trajectory_size(traj);
  CHECK(count == 11);

  size_t len = 0;
  REQUIRE(nlqsl_qsl_trace(traj, &ramp, &cubic, nullptr, nullptr, 0, &len) ==
          NLQSL_OK);
  REQUIRE(len == count);
  std::vector<double> times(len), speeds(len);
  REQUIRE(nlqsl_qsl_trace(traj, &ramp, &cubic, times.data(), speeds.data(),
                          len, &len) == NLQSL_OK);
  CHECK(times.front() == 0.0);
  CHECK(times.back() == doctest::Approx(0.2));
  for (double v : speeds) CHECK(v >= 0.0);

  nlqsl_state* snap = nullptr;
  REQUIRE(nlqsl_trajectory_state(traj, count - 1, &snap) == NLQSL_OK);
  double nrm = 0.0;
  REQUIRE(nlqsl_norm(snap, &nrm) == NLQSL_OK);
  CHECK(nrm == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(nlqsl_trajectory_state(traj, count, &snap) ==
        NLQSL_ERR_INVALID_ARGUMENT);

  nlqsl_state_free(snap);
  nlqsl_trajectory_free(traj);
  nlqsl_state_free(psi0);
  nlqsl_grid_free(grid);
}

TEST_CASE("box toolbox through the C surface") {
  double nu = -1.0;
  REQUIRE(nlqsl_box_solve_nu(0.25, 1.0, 1.0, 1, 1.0, &nu) == NLQSL_OK);
  double K = 0.0, E = 0.0;
  REQUIRE(nlqsl_elliptic_k(nu, &K) == NLQSL_OK);
  REQUIRE(nlqsl_elliptic_e(nu, &E) == NLQSL_OK);
  CHECK(std::abs(K * (K - E) - 0.0625) < 1e-12);
  CHECK(nlqsl_box_solve_nu(-1.0, 1.0, 1.0, 1, 1.0, &nu) ==
        NLQSL_ERR_INVALID_ARGUMENT);

  double e1 = 0.0;
  REQUIRE(nlqsl_box_energy(1, 1.0, 1.0, 1.0, &e1) == NLQSL_OK);
  CHECK(e1 == doctest::Approx(M_PI * M_PI / 2.0));

  double mu = 0.0;
  REQUIRE(nlqsl_box_chemical_potential(1, 1.0, nu, 1.0, 1.0, &mu) == NLQSL_OK);
  CHECK(mu > e1);

  double x2 = 0.0, x4 = 0.0, p2 = 0.0;
  REQUIRE(nlqsl_box_moments_exact(1.0, nu, &x2, &x4) == NLQSL_OK);
  REQUIRE(nlqsl_box_moments_perturbative(0.25, 1.0, 1.0, 1.0, &x2, &x4, &p2) ==
          NLQSL_OK);

  nlqsl_qsl_terms terms;
  REQUIRE(nlqsl_box_qsl(0.25, 1.0, 1.0, 0.5, 1.0, 1.0, NLQSL_BOX_EXACT,
                        &terms) == NLQSL_OK);
  CHECK(terms.total == doctest::Approx(terms.term_mu + terms.term_x2 +
                                       terms.term_x4 + terms.term_p2)
                           .epsilon(1e-12));

  // the closed-form scale-invariant entry point agrees with the assembly
  const nlqsl_length_protocol lin_prot{0, 1.0, 1.0, 0.0, 0.0, 0.0};
  nlqsl_qsl_terms direct;
  REQUIRE(nlqsl_box_p2_exact(terms.lambda, nu, 1.0, &p2) == NLQSL_OK);
  REQUIRE(nlqsl_box_moments_exact(terms.lambda, nu, &x2, &x4) == NLQSL_OK);
  REQUIRE(nlqsl_qsl_scale_invariant(mu, &lin_prot, 0.5, x2, x4, p2, 1.0, 1.0,
                                    &direct) == NLQSL_OK);
  CHECK(direct.total == doctest::Approx(terms.total).epsilon(1e-12));
}

TEST_CASE("scale-invariant solutions through handles") {
  const nlqsl_length_protocol prot{1, 0.0, 0.0, 1.0, 0.0, 1.0};
  double tau = 0.0;
  REQUIRE(nlqsl_tau_integral(&prot, 1.0, &tau) == NLQSL_OK);
  CHECK(tau == doctest::Approx(std::atan(1.0)).epsilon(1e-10));

  nlqsl_scale_solution* sol = nullptr;
  REQUIRE(nlqsl_scale_solution_harmonic(0.0, &prot, 1.0, 1.0, 0.5, &sol) ==
          NLQSL_OK);
  double mu0 = 0.0;
  REQUIRE(nlqsl_scale_solution_mu0(sol, &mu0) == NLQSL_OK);
  CHECK(mu0 == doctest::Approx(0.5));

  nlqsl_grid* grid = nullptr;
  REQUIRE(nlqsl_grid_create(-12.0, 12.0, 1024, &grid) == NLQSL_OK);
  nlqsl_state* built = nullptr;
  REQUIRE(nlqsl_scale_build(sol, 0.5, grid, &built) == NLQSL_OK);
  double nrm = 0.0;
  REQUIRE(nlqsl_norm(built, &nrm) == NLQSL_OK);
  CHECK(nrm == doctest::Approx(1.0).epsilon(1e-6));

  double residual = 1.0;
  REQUIRE(nlqsl_scale_verify(sol, 0.5, grid, 1.0, &residual) == NLQSL_OK);
  CHECK(residual < 1e-4);

  nlqsl_state_free(built);
  nlqsl_grid_free(grid);
  nlqsl_scale_solution_free(sol);

  // box solution rejects curved protocols through the same path
  CHECK(nlqsl_scale_solution_box(0.5, &prot, 1.0, 1.0, 0.5, &sol) ==
        NLQSL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("scenario runner through the C surface") {
  const fs::path dir = fs::temp_directory_path() / "nlqsl_capi_run";
  fs::remove_all(dir);

  nlqsl_scenario_config* cfg = nullptr;
  REQUIRE(nlqsl_scenario_config_create("custom", &cfg) == NLQSL_OK);
  CHECK(nlqsl_scenario_config_set(cfg, "bogus", "1") ==
        NLQSL_ERR_INVALID_ARGUMENT);
  REQUIRE(nlqsl_scenario_config_set(cfg, "grid", "256") == NLQSL_OK);
  REQUIRE(nlqsl_scenario_config_set(cfg, "dt", "2e-4") == NLQSL_OK);
  REQUIRE(nlqsl_scenario_config_set(cfg, "samples", "100") == NLQSL_OK);
  REQUIRE(nlqsl_scenario_config_set(cfg, "kappa", "1") == NLQSL_OK);
  REQUIRE(nlqsl_scenario_config_set(cfg, "p", "2") == NLQSL_OK);
  REQUIRE(nlqsl_scenario_config_set(cfg, "out", dir.string().c_str()) ==
          NLQSL_OK);

  char manifest[4096] = {0};
  REQUIRE(nlqsl_scenario_run(cfg, manifest, sizeof(manifest)) == NLQSL_OK);
  CHECK(fs::exists(manifest));
  CHECK(fs::exists(dir / "custom_trace_p2_kappa1.csv"));
  CHECK(fs::exists(dir / "custom_wave_p2_kappa1.csv"));

  nlqsl_scenario_config_free(cfg);

  CHECK(nlqsl_scenario_config_create("fig9", &cfg) ==
        NLQSL_ERR_INVALID_ARGUMENT);
  fs::remove_all(dir);
}
