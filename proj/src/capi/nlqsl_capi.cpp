#include <nlqsl/nlqsl.h>

#include <cstring>
#include <stdexcept>
#include <string>

#include "box.hpp"
#include "propagator.hpp"
#include "qsl.hpp"
#include "scale_invariant.hpp"
#include "scenario.hpp"
#include "version.hpp"
#include "wavefunction.hpp"

// Opaque handle definitions: each wraps one core value type.
struct nlqsl_grid {
  nlqsl::SpatialGrid grid;
};
struct nlqsl_state {
  nlqsl::WaveFunction psi;
};
struct nlqsl_trajectory {
  nlqsl::Trajectory traj;
};
struct nlqsl_scale_solution {
  nlqsl::ScaleInvariantSolution sol;
};
struct nlqsl_scenario_config {
  nlqsl::ScenarioConfig cfg;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : "unknown"; }

template <typename Fn>
nlqsl_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return NLQSL_OK;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return NLQSL_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return NLQSL_ERR_INVALID_ARGUMENT;
  } catch (const std::ios_base::failure& e) {
    set_error(e.what());
    return NLQSL_ERR_IO;
  } catch (const std::runtime_error& e) {
    set_error(e.what());
    return NLQSL_ERR_NUMERICAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return NLQSL_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return NLQSL_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

nlqsl::PotentialFn to_potential(const nlqsl_potential_spec* pot, double mass) {
  require(pot != nullptr, "null potential spec");
  switch (pot->kind) {
    case NLQSL_POTENTIAL_NONE:
      return nlqsl::make_zero_potential();
    case NLQSL_POTENTIAL_HARMONIC_STATIC:
      return nlqsl::make_static_harmonic_potential(pot->omega0, mass);
    case NLQSL_POTENTIAL_HARMONIC_RAMP:
      return nlqsl::make_harmonic_potential(
          nlqsl::HarmonicRamp(pot->omega0, pot->omega1, pot->tau), mass);
    case NLQSL_POTENTIAL_HARMONIC_SCALED:
      return nlqsl::make_scaled_harmonic_potential(
          pot->omega0, nlqsl::LengthProtocol::sqrt_form(pot->a, pot->b, pot->c),
          mass);
  }
  throw std::invalid_argument("unknown potential kind");
}

nlqsl::NonlinearitySpec to_nl(const nlqsl_nonlinearity* nl) {
  require(nl != nullptr, "null nonlinearity spec");
  return nlqsl::NonlinearitySpec(nl->p, nl->kappa);
}

nlqsl::LengthProtocol to_protocol(const nlqsl_length_protocol* protocol) {
  require(protocol != nullptr, "null length protocol");
  if (protocol->is_sqrt_form) {
    return nlqsl::LengthProtocol::sqrt_form(protocol->a, protocol->b,
                                            protocol->c);
  }
  return nlqsl::LengthProtocol::linear(protocol->lambda0, protocol->v);
}

void fill_terms(const nlqsl::QslTerms& q, nlqsl_qsl_terms* out) {
  out->total = q.total;
  out->term_mu = q.term_mu;
  out->term_x2 = q.term_x2;
  out->term_x4 = q.term_x4;
  out->term_p2 = q.term_p2;
  out->lambda = q.lambda;
  out->lambda_dot = q.lambda_dot;
  out->lambda_ddot = q.lambda_ddot;
  out->mu_t = q.mu_t;
}

}  // namespace

extern "C" {

const char* nlqsl_version(void) { return nlqsl::kVersion; }

const char* nlqsl_last_error(void) { return g_last_error.c_str(); }

/* ------------------------------ grids ------------------------------ */

nlqsl_status nlqsl_grid_create(double x_min, double x_max, int n_points,
                               nlqsl_grid** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(n_points > 0, "n_points must be positive");
    *out = new nlqsl_grid{
        nlqsl::SpatialGrid(x_min, x_max, static_cast<std::size_t>(n_points))};
  });
}

void nlqsl_grid_free(nlqsl_grid* grid) { delete grid; }

int nlqsl_grid_size(const nlqsl_grid* grid) {
  return grid ? static_cast<int>(grid->grid.size()) : 0;
}

double nlqsl_grid_dx(const nlqsl_grid* grid) {
  return grid ? grid->grid.dx() : 0.0;
}

nlqsl_status nlqsl_grid_points(const nlqsl_grid* grid, double* xs,
                               size_t cap) {
  return guarded([&] {
    require(grid && xs, "null argument");
    require(cap >= grid->grid.size(), "buffer too small");
    for (std::size_t j = 0; j < grid->grid.size(); ++j) xs[j] = grid->grid.x(j);
  });
}

/* ------------------------------ states ----------------------------- */

nlqsl_status nlqsl_state_create(const nlqsl_grid* grid, const double* re,
                                const double* im, double hbar, double mass,
                                nlqsl_state** out) {
  return guarded([&] {
    require(grid && re && out, "null argument");
    std::vector<nlqsl::Complex> amps(grid->grid.size());
    for (std::size_t j = 0; j < amps.size(); ++j) {
      amps[j] = nlqsl::Complex(re[j], im ? im[j] : 0.0);
    }
    *out = new nlqsl_state{
        nlqsl::WaveFunction(grid->grid, std::move(amps), hbar, mass)};
  });
}

nlqsl_status nlqsl_state_gaussian_ground(const nlqsl_grid* grid, double mass,
                                         double omega0, double hbar,
                                         nlqsl_state** out) {
  return guarded([&] {
    require(grid && out, "null argument");
    *out = new nlqsl_state{
        nlqsl::ground_state_gaussian(grid->grid, mass, omega0, hbar)};
  });
}

nlqsl_status nlqsl_state_box_linear(const nlqsl_grid* grid, int n,
                                    double lambda, double hbar, double mass,
                                    nlqsl_state** out, double* energy_out) {
  return guarded([&] {
    require(grid && out, "null argument");
    auto eig = nlqsl::linear_eigenstate(n, lambda, grid->grid, hbar, mass);
    if (energy_out) *energy_out = eig.energy;
    *out = new nlqsl_state{std::move(eig.state)};
  });
}

nlqsl_status nlqsl_state_box_stationary(const nlqsl_grid* grid, int n,
                                        double lambda, double nu, double hbar,
                                        double mass, nlqsl_state** out) {
  return guarded([&] {
    require(grid && out, "null argument");
    *out = new nlqsl_state{
        nlqsl::stationary_state(n, lambda, nu, grid->grid, hbar, mass)};
  });
}

void nlqsl_state_free(nlqsl_state* state) { delete state; }

nlqsl_status nlqsl_state_amplitudes(const nlqsl_state* state, double* re,
                                    double* im, size_t cap) {
  return guarded([&] {
    require(state && re, "null argument");
    require(cap >= state->psi.amplitudes.size(), "buffer too small");
    for (std::size_t j = 0; j < state->psi.amplitudes.size(); ++j) {
      re[j] = state->psi.amplitudes[j].real();
      if (im) im[j] = state->psi.amplitudes[j].imag();
    }
  });
}

/* --------------------------- observables --------------------------- */

nlqsl_status nlqsl_norm(const nlqsl_state* state, double* out) {
  return guarded([&] {
    require(state && out, "null argument");
    *out = nlqsl::norm(state->psi);
  });
}

nlqsl_status nlqsl_moment_x(const nlqsl_state* state, int n, double* out) {
  return guarded([&] {
    require(state && out, "null argument");
    *out = nlqsl::moment_x(state->psi, n);
  });
}

nlqsl_status nlqsl_moment_p2(const nlqsl_state* state, double* out,
                             int* boundary_warning) {
  return guarded([&] {
    require(state && out, "null argument");
    bool warn = false;
    *out = nlqsl::moment_p2(state->psi, &warn);
    if (boundary_warning) *boundary_warning = warn ? 1 : 0;
  });
}

nlqsl_status nlqsl_l2_distance(const nlqsl_state* a, const nlqsl_state* b,
                               double* out) {
  return guarded([&] {
    require(a && b && out, "null argument");
    *out = nlqsl::l2_distance(a->psi, b->psi);
  });
}

/* ------------------------ special functions ------------------------ */

nlqsl_status nlqsl_elliptic_k(double nu, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nlqsl::elliptic_k(nu);
  });
}

nlqsl_status nlqsl_elliptic_e(double nu, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nlqsl::elliptic_e(nu);
  });
}

nlqsl_status nlqsl_jacobi_sn(double u, double nu, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nlqsl::jacobi_sn(u, nu);
  });
}

nlqsl_status nlqsl_jacobi_sn_series(double u, double nu, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nlqsl::jacobi_sn_series(u, nu);
  });
}

/* ----------------------------- dynamics ---------------------------- */

nlqsl_status nlqsl_potential_eval(const nlqsl_potential_spec* pot, double mass,
                                  double x, double t, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = to_potential(pot, mass)(x, t);
  });
}

nlqsl_status nlqsl_propagate(const nlqsl_state* psi0,
                             const nlqsl_potential_spec* pot,
                             const nlqsl_nonlinearity* nl, double t_final,
                             double dt, int sample_every,
                             nlqsl_trajectory** out) {
  return guarded([&] {
    require(psi0 && out, "null argument");
    *out = new nlqsl_trajectory{
        nlqsl::propagate(psi0->psi, to_potential(pot, psi0->psi.mass),
                         to_nl(nl), t_final, dt, sample_every)};
  });
}

void nlqsl_trajectory_free(nlqsl_trajectory* traj) { delete traj; }

size_t nlqsl_trajectory_size(const nlqsl_trajectory* traj) {
  return traj ? traj->traj.times.size() : 0;
}

nlqsl_status nlqsl_trajectory_time(const nlqsl_trajectory* traj, size_t i,
                                   double* out) {
  return guarded([&] {
    require(traj && out, "null argument");
    require(i < traj->traj.times.size(), "sample index out of range");
    *out = traj->traj.times[i];
  });
}

nlqsl_status nlqsl_trajectory_state(const nlqsl_trajectory* traj, size_t i,
                                    nlqsl_state** out) {
  return guarded([&] {
    require(traj && out, "null argument");
    require(i < traj->traj.states.size(), "sample index out of range");
    *out = new nlqsl_state{traj->traj.states[i]};
  });
}

/* ------------------------------- qsl ------------------------------- */

nlqsl_status nlqsl_qsl_numeric(const nlqsl_state* state,
                               const nlqsl_potential_spec* pot, double t,
                               const nlqsl_nonlinearity* nl, double* out) {
  return guarded([&] {
    require(state && out, "null argument");
    *out = nlqsl::qsl_numeric(state->psi, to_potential(pot, state->psi.mass),
                              t, to_nl(nl));
  });
}

nlqsl_status nlqsl_qsl_scale_invariant(double mu0,
                                       const nlqsl_length_protocol* protocol,
                                       double t, double x2, double x4,
                                       double p2, double mass, double hbar,
                                       nlqsl_qsl_terms* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    fill_terms(nlqsl::qsl_scale_invariant(mu0, to_protocol(protocol), t, x2,
                                          x4, p2, mass, hbar),
               out);
  });
}

nlqsl_status nlqsl_qsl_trace(const nlqsl_trajectory* traj,
                             const nlqsl_potential_spec* pot,
                             const nlqsl_nonlinearity* nl, double* times,
                             double* v, size_t cap, size_t* out_len) {
  return guarded([&] {
    require(traj && out_len, "null argument");
    *out_len = traj->traj.times.size();
    if (cap == 0) return;
    require(times && v, "null argument");
    require(cap >= traj->traj.times.size(), "buffer too small");
    const double mass = traj->traj.states.front().mass;
    const nlqsl::QslTrace trace =
        nlqsl::qsl_trace(traj->traj, to_potential(pot, mass), to_nl(nl));
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
      times[i] = trace.times[i];
      v[i] = trace.v_qsl[i];
    }
  });
}

/* ------------------------------- box ------------------------------- */

nlqsl_status nlqsl_box_energy(int n, double lambda, double mass, double hbar,
                              double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nlqsl::box_energy(n, lambda, mass, hbar);
  });
}

nlqsl_status nlqsl_box_solve_nu(double kappa, double lambda, double mass,
                                int n, double hbar, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nlqsl::solve_nu(kappa, lambda, mass, n, hbar);
  });
}

nlqsl_status nlqsl_box_chemical_potential(int n, double lambda, double nu,
                                          double mass, double hbar,
                                          double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nlqsl::chemical_potential_exact(n, lambda, nu, mass, hbar);
  });
}

nlqsl_status nlqsl_box_chemical_potential_perturbative(int n, double lambda,
                                                       double kappa,
                                                       double mass,
                                                       double hbar,
                                                       double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nlqsl::chemical_potential_perturbative(n, lambda, kappa, mass, hbar);
  });
}

nlqsl_status nlqsl_box_p2_exact(double lambda, double nu, double hbar,
                                double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nlqsl::box_p2_exact(lambda, nu, hbar);
  });
}

nlqsl_status nlqsl_box_moments_exact(double lambda, double nu, double* x2,
                                     double* x4) {
  return guarded([&] {
    require(x2 && x4, "null output pointer");
    const nlqsl::BoxMoments m = nlqsl::box_moments_exact(lambda, nu);
    *x2 = m.x2;
    *x4 = m.x4;
  });
}

nlqsl_status nlqsl_box_moments_perturbative(double kappa, double lambda,
                                            double mass, double hbar,
                                            double* x2, double* x4,
                                            double* p2) {
  return guarded([&] {
    require(x2 && x4 && p2, "null output pointer");
    const nlqsl::BoxMoments m =
        nlqsl::box_moments_perturbative(kappa, lambda, mass, hbar);
    *x2 = m.x2;
    *x4 = m.x4;
    *p2 = m.p2;
  });
}

nlqsl_status nlqsl_box_normalization_perturbative(double lambda, double nu,
                                                  double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nlqsl::normalization_perturbative(lambda, nu);
  });
}

nlqsl_status nlqsl_box_qsl(double kappa, double lambda0, double v, double t,
                           double mass, double hbar, nlqsl_box_mode mode,
                           nlqsl_qsl_terms* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    const auto cxx_mode = (mode == NLQSL_BOX_EXACT)
                              ? nlqsl::BoxMode::Exact
                              : nlqsl::BoxMode::Perturbative;
    fill_terms(nlqsl::qsl_box(kappa, lambda0, v, t, mass, hbar, cxx_mode), out);
  });
}

/* ------------------------ scale-invariant -------------------------- */

nlqsl_status nlqsl_tau_integral(const nlqsl_length_protocol* protocol,
                                double t, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nlqsl::tau_integral(to_protocol(protocol), t);
  });
}

nlqsl_status nlqsl_scale_solution_harmonic(
    double omega_drive, const nlqsl_length_protocol* protocol, double mass,
    double hbar, double scaling_exponent, nlqsl_scale_solution** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new nlqsl_scale_solution{nlqsl::make_harmonic_scale_solution(
        omega_drive, to_protocol(protocol), mass, hbar, scaling_exponent)};
  });
}

nlqsl_status nlqsl_scale_solution_box(double kappa,
                                      const nlqsl_length_protocol* protocol,
                                      double mass, double hbar,
                                      double scaling_exponent,
                                      nlqsl_scale_solution** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new nlqsl_scale_solution{nlqsl::make_box_scale_solution(
        kappa, to_protocol(protocol), mass, hbar, scaling_exponent)};
  });
}

void nlqsl_scale_solution_free(nlqsl_scale_solution* sol) { delete sol; }

nlqsl_status nlqsl_scale_solution_mu0(const nlqsl_scale_solution* sol,
                                      double* out) {
  return guarded([&] {
    require(sol && out, "null argument");
    *out = sol->sol.mu0;
  });
}

nlqsl_status nlqsl_scale_build(const nlqsl_scale_solution* sol, double t,
                               const nlqsl_grid* grid, nlqsl_state** out) {
  return guarded([&] {
    require(sol && grid && out, "null argument");
    *out = new nlqsl_state{nlqsl::build_solution(sol->sol, t, grid->grid)};
  });
}

nlqsl_status nlqsl_scale_profile(const nlqsl_scale_solution* sol, double t,
                                 const nlqsl_grid* grid, nlqsl_state** out) {
  return guarded([&] {
    require(sol && grid && out, "null argument");
    *out = new nlqsl_state{nlqsl::profile_state(sol->sol, t, grid->grid)};
  });
}

nlqsl_status nlqsl_scale_verify(const nlqsl_scale_solution* sol, double t,
                                const nlqsl_grid* grid,
                                double interior_fraction,
                                double* rel_residual) {
  return guarded([&] {
    require(sol && grid && rel_residual, "null argument");
    *rel_residual =
        nlqsl::verify_solution(sol->sol, t, grid->grid, interior_fraction)
            .l2_rel;
  });
}

/* ----------------------------- scenarios --------------------------- */

nlqsl_status nlqsl_scenario_config_create(const char* scenario_id,
                                          nlqsl_scenario_config** out) {
  return guarded([&] {
    require(scenario_id && out, "null argument");
    *out = new nlqsl_scenario_config{nlqsl::default_config(scenario_id)};
  });
}

nlqsl_status nlqsl_scenario_config_load_file(nlqsl_scenario_config* cfg,
                                             const char* path) {
  return guarded([&] {
    require(cfg && path, "null argument");
    nlqsl::load_config_file(cfg->cfg, path);
  });
}

nlqsl_status nlqsl_scenario_config_set(nlqsl_scenario_config* cfg,
                                       const char* key, const char* value) {
  return guarded([&] {
    require(cfg && key && value, "null argument");
    nlqsl::apply_key_value(cfg->cfg, key, value);
  });
}

void nlqsl_scenario_config_free(nlqsl_scenario_config* cfg) { delete cfg; }

nlqsl_status nlqsl_scenario_run(const nlqsl_scenario_config* cfg,
                                char* manifest_path, size_t cap) {
  return guarded([&] {
    require(cfg != nullptr, "null argument");
    const nlqsl::RunResult result = nlqsl::run_scenario(cfg->cfg);
    if (manifest_path && cap > 0) {
      std::strncpy(manifest_path, result.manifest_path.c_str(), cap - 1);
      manifest_path[cap - 1] = '\0';
    }
  });
}

} /* extern "C" */
