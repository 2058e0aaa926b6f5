/* nlqsl -- nonlinear Schroedinger quantum-speed-limit toolkit, C API.
 *
 * The library is a C++ core exposed through this flat C interface: opaque
 * handles, status codes, out-parameters. Every function that can fail
 * returns nlqsl_status; on failure the out-parameters are untouched and a
 * thread-local message is available from nlqsl_last_error().
 *
 * Handles returned through *_create / *_build functions are owned by the
 * caller and released with the matching *_free function. All functions are
 * thread-safe as long as a given handle is not used from two threads at
 * once.
 */
#ifndef NLQSL_H
#define NLQSL_H

#include <stddef.h>

#if defined(_WIN32)
#define NLQSL_API __declspec(dllexport)
#else
#define NLQSL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nlqsl_status {
  NLQSL_OK = 0,
  NLQSL_ERR_INVALID_ARGUMENT = 1, /* bad parameters, unnormalized state, ... */
  NLQSL_ERR_DOMAIN = 2,           /* special-function argument out of range */
  NLQSL_ERR_NUMERICAL = 3,        /* runtime abort, e.g. norm drift */
  NLQSL_ERR_IO = 4,               /* file system failure */
  NLQSL_ERR_INTERNAL = 5
} nlqsl_status;

NLQSL_API const char* nlqsl_version(void);

/* Message describing the most recent failure on this thread. */
NLQSL_API const char* nlqsl_last_error(void);

/* ------------------------------------------------------------------ */
/* grids and states                                                   */
/* ------------------------------------------------------------------ */

typedef struct nlqsl_grid nlqsl_grid;
typedef struct nlqsl_state nlqsl_state;

/* Uniform periodic grid on [x_min, x_max); n_points must be a power of two
 * >= 16. */
NLQSL_API nlqsl_status nlqsl_grid_create(double x_min, double x_max,
                                         int n_points, nlqsl_grid** out);
NLQSL_API void nlqsl_grid_free(nlqsl_grid* grid);
NLQSL_API int nlqsl_grid_size(const nlqsl_grid* grid);
NLQSL_API double nlqsl_grid_dx(const nlqsl_grid* grid);
/* Fills xs[0..n_points); cap must be >= n_points. */
NLQSL_API nlqsl_status nlqsl_grid_points(const nlqsl_grid* grid, double* xs,
                                         size_t cap);

/* State from caller-supplied samples (im may be NULL for a real state). */
NLQSL_API nlqsl_status nlqsl_state_create(const nlqsl_grid* grid,
                                          const double* re, const double* im,
                                          double hbar, double mass,
                                          nlqsl_state** out);
/* Ground state of the static harmonic trap, normalized on the grid. */
NLQSL_API nlqsl_status nlqsl_state_gaussian_ground(const nlqsl_grid* grid,
                                                   double mass, double omega0,
                                                   double hbar,
                                                   nlqsl_state** out);
/* Hard-wall eigenstate sqrt(2/lambda) sin(n pi x/lambda) on [0, lambda],
 * zero outside; *energy_out (optional) receives E_n. */
NLQSL_API nlqsl_status nlqsl_state_box_linear(const nlqsl_grid* grid, int n,
                                              double lambda, double hbar,
                                              double mass, nlqsl_state** out,
                                              double* energy_out);
/* Stationary nonlinear box profile at elliptic parameter nu. */
NLQSL_API nlqsl_status nlqsl_state_box_stationary(const nlqsl_grid* grid,
                                                  int n, double lambda,
                                                  double nu, double hbar,
                                                  double mass,
                                                  nlqsl_state** out);
NLQSL_API void nlqsl_state_free(nlqsl_state* state);
NLQSL_API nlqsl_status nlqsl_state_amplitudes(const nlqsl_state* state,
                                              double* re, double* im,
                                              size_t cap);

/* ------------------------------------------------------------------ */
/* observables                                                        */
/* ------------------------------------------------------------------ */

NLQSL_API nlqsl_status nlqsl_norm(const nlqsl_state* state, double* out);
/* <x^n> for n in {1,2,3,4}; requires |norm - 1| < 1e-6. */
NLQSL_API nlqsl_status nlqsl_moment_x(const nlqsl_state* state, int n,
                                      double* out);
/* Spectral <p^2>; *boundary_warning (optional) is set to 1 when the edge
 * amplitude exceeds 1e-6 (boundary contamination). */
NLQSL_API nlqsl_status nlqsl_moment_p2(const nlqsl_state* state, double* out,
                                       int* boundary_warning);
NLQSL_API nlqsl_status nlqsl_l2_distance(const nlqsl_state* a,
                                         const nlqsl_state* b, double* out);

/* ------------------------------------------------------------------ */
/* special functions (parameter convention: second argument nu = m)   */
/* ------------------------------------------------------------------ */

NLQSL_API nlqsl_status nlqsl_elliptic_k(double nu, double* out);
NLQSL_API nlqsl_status nlqsl_elliptic_e(double nu, double* out);
NLQSL_API nlqsl_status nlqsl_jacobi_sn(double u, double nu, double* out);
NLQSL_API nlqsl_status nlqsl_jacobi_sn_series(double u, double nu,
                                              double* out);

/* ------------------------------------------------------------------ */
/* dynamics                                                           */
/* ------------------------------------------------------------------ */

typedef enum nlqsl_potential_kind {
  NLQSL_POTENTIAL_NONE = 0,
  NLQSL_POTENTIAL_HARMONIC_STATIC = 1, /* 1/2 m omega0^2 x^2 */
  NLQSL_POTENTIAL_HARMONIC_RAMP = 2,   /* omega_t^2 linear from omega0^2 to
                                          omega1^2 over [0, tau] */
  NLQSL_POTENTIAL_HARMONIC_SCALED = 3  /* trap frequency omega0 (l0/l_t)^2
                                          following the length protocol */
} nlqsl_potential_kind;

typedef struct nlqsl_potential_spec {
  nlqsl_potential_kind kind;
  double omega0;
  double omega1;
  double tau;
  /* protocol for NLQSL_POTENTIAL_HARMONIC_SCALED:
   * lambda_t = sqrt(a t^2 + 2 b t + c) */
  double a, b, c;
} nlqsl_potential_spec;

/* Interaction term kappa |psi|^{2p} psi; p in {0,1,2}, kappa >= 0. */
typedef struct nlqsl_nonlinearity {
  int p;
  double kappa;
} nlqsl_nonlinearity;

NLQSL_API nlqsl_status nlqsl_potential_eval(const nlqsl_potential_spec* pot,
                                            double mass, double x, double t,
                                            double* out);

typedef struct nlqsl_trajectory nlqsl_trajectory;

/* Strang split-step propagation from t = 0 to t_final, sampling every
 * sample_every steps. Norm drift beyond 1e-6 aborts with
 * NLQSL_ERR_NUMERICAL. */
NLQSL_API nlqsl_status nlqsl_propagate(const nlqsl_state* psi0,
                                       const nlqsl_potential_spec* pot,
                                       const nlqsl_nonlinearity* nl,
                                       double t_final, double dt,
                                       int sample_every,
                                       nlqsl_trajectory** out);
NLQSL_API void nlqsl_trajectory_free(nlqsl_trajectory* traj);
NLQSL_API size_t nlqsl_trajectory_size(const nlqsl_trajectory* traj);
NLQSL_API nlqsl_status nlqsl_trajectory_time(const nlqsl_trajectory* traj,
                                             size_t i, double* out);
/* Copies sample i into a fresh state handle. */
NLQSL_API nlqsl_status nlqsl_trajectory_state(const nlqsl_trajectory* traj,
                                              size_t i, nlqsl_state** out);

/* ------------------------------------------------------------------ */
/* quantum speed limit                                                */
/* ------------------------------------------------------------------ */

/* v = integral |dpsi/dt|^2 dx evaluated through the equation of motion at
 * time t; requires a normalized state. */
NLQSL_API nlqsl_status nlqsl_qsl_numeric(const nlqsl_state* state,
                                         const nlqsl_potential_spec* pot,
                                         double t,
                                         const nlqsl_nonlinearity* nl,
                                         double* out);

typedef struct nlqsl_length_protocol {
  int is_sqrt_form; /* 0: lambda_t = lambda0 + v t; 1: sqrt(a t^2+2 b t+c) */
  double lambda0, v;
  double a, b, c;
} nlqsl_length_protocol;

typedef struct nlqsl_qsl_terms {
  double total;
  double term_mu, term_x2, term_x4, term_p2;
  double lambda, lambda_dot, lambda_ddot, mu_t;
} nlqsl_qsl_terms;

/* Closed-form scale-invariant speed with per-term breakdown. x2, x4, p2
 * are the moments of the rescaled profile at lambda_t. */
NLQSL_API nlqsl_status nlqsl_qsl_scale_invariant(
    double mu0, const nlqsl_length_protocol* protocol, double t, double x2,
    double x4, double p2, double mass, double hbar, nlqsl_qsl_terms* out);

/* v_qsl at every trajectory sample. times/v hold cap entries; *out_len
 * receives the sample count (call with cap = 0 to query it). */
NLQSL_API nlqsl_status nlqsl_qsl_trace(const nlqsl_trajectory* traj,
                                       const nlqsl_potential_spec* pot,
                                       const nlqsl_nonlinearity* nl,
                                       double* times, double* v, size_t cap,
                                       size_t* out_len);

/* ------------------------------------------------------------------ */
/* expanding box                                                      */
/* ------------------------------------------------------------------ */

NLQSL_API nlqsl_status nlqsl_box_energy(int n, double lambda, double mass,
                                        double hbar, double* out);
/* Root of K(nu)(K(nu)-E(nu)) = m lambda kappa / (4 n^2 hbar^2). */
NLQSL_API nlqsl_status nlqsl_box_solve_nu(double kappa, double lambda,
                                          double mass, int n, double hbar,
                                          double* out);
NLQSL_API nlqsl_status nlqsl_box_chemical_potential(int n, double lambda,
                                                    double nu, double mass,
                                                    double hbar, double* out);
NLQSL_API nlqsl_status nlqsl_box_chemical_potential_perturbative(
    int n, double lambda, double kappa, double mass, double hbar, double* out);
/* Ground-state <p^2> in closed form. */
NLQSL_API nlqsl_status nlqsl_box_p2_exact(double lambda, double nu,
                                          double hbar, double* out);
/* Ground-state <x^2>, <x^4> by adaptive quadrature of the exact profile. */
NLQSL_API nlqsl_status nlqsl_box_moments_exact(double lambda, double nu,
                                               double* x2, double* x4);
NLQSL_API nlqsl_status nlqsl_box_moments_perturbative(double kappa,
                                                      double lambda,
                                                      double mass, double hbar,
                                                      double* x2, double* x4,
                                                      double* p2);
/* First-order normalization A_1. */
NLQSL_API nlqsl_status nlqsl_box_normalization_perturbative(double lambda,
                                                            double nu,
                                                            double* out);

typedef enum nlqsl_box_mode {
  NLQSL_BOX_EXACT = 0,
  NLQSL_BOX_PERTURBATIVE = 1
} nlqsl_box_mode;

/* Speed of the box expanding as lambda_t = lambda0 + v t. */
NLQSL_API nlqsl_status nlqsl_box_qsl(double kappa, double lambda0, double v,
                                     double t, double mass, double hbar,
                                     nlqsl_box_mode mode,
                                     nlqsl_qsl_terms* out);

/* ------------------------------------------------------------------ */
/* scale-invariant solutions                                          */
/* ------------------------------------------------------------------ */

typedef struct nlqsl_scale_solution nlqsl_scale_solution;

/* tau(t) = integral_0^t ds / lambda_s^2. */
NLQSL_API nlqsl_status nlqsl_tau_integral(
    const nlqsl_length_protocol* protocol, double t, double* out);

/* Gaussian base profile for harmonic (omega_drive > 0) or free
 * (omega_drive = 0) driving under the protocol. Linear dynamics. */
NLQSL_API nlqsl_status nlqsl_scale_solution_harmonic(
    double omega_drive, const nlqsl_length_protocol* protocol, double mass,
    double hbar, double scaling_exponent, nlqsl_scale_solution** out);
/* Box ground-state profile (odd-periodic continuation); the protocol must
 * have zero curvature (a c = b^2 or the linear form). */
NLQSL_API nlqsl_status nlqsl_scale_solution_box(
    double kappa, const nlqsl_length_protocol* protocol, double mass,
    double hbar, double scaling_exponent, nlqsl_scale_solution** out);
NLQSL_API void nlqsl_scale_solution_free(nlqsl_scale_solution* sol);
NLQSL_API nlqsl_status nlqsl_scale_solution_mu0(
    const nlqsl_scale_solution* sol, double* out);

/* The constructed solution (with both phase factors) at time t. */
NLQSL_API nlqsl_status nlqsl_scale_build(const nlqsl_scale_solution* sol,
                                         double t, const nlqsl_grid* grid,
                                         nlqsl_state** out);
/* The rescaled profile without the phases. */
NLQSL_API nlqsl_status nlqsl_scale_profile(const nlqsl_scale_solution* sol,
                                           double t, const nlqsl_grid* grid,
                                           nlqsl_state** out);
/* Relative L2 residual of the driven equation on the constructed state
 * (finite-difference time derivative, spectral Laplacian), restricted to
 * the centered interior_fraction of the grid. */
NLQSL_API nlqsl_status nlqsl_scale_verify(const nlqsl_scale_solution* sol,
                                          double t, const nlqsl_grid* grid,
                                          double interior_fraction,
                                          double* rel_residual);

/* ------------------------------------------------------------------ */
/* scenario runner                                                    */
/* ------------------------------------------------------------------ */

typedef struct nlqsl_scenario_config nlqsl_scenario_config;

/* Preset configuration for "fig1".."fig5" or "custom". */
NLQSL_API nlqsl_status nlqsl_scenario_config_create(
    const char* scenario_id, nlqsl_scenario_config** out);
/* Flat key=value file; '#' comments. */
NLQSL_API nlqsl_status nlqsl_scenario_config_load_file(
    nlqsl_scenario_config* cfg, const char* path);
/* Single key=value override (keys as in the config file). */
NLQSL_API nlqsl_status nlqsl_scenario_config_set(nlqsl_scenario_config* cfg,
                                                 const char* key,
                                                 const char* value);
NLQSL_API void nlqsl_scenario_config_free(nlqsl_scenario_config* cfg);

/* Runs the scenario, writing CSV files and manifest.json under the
 * configured output directory. On success the manifest path is copied into
 * manifest_path (if cap permits). Parallelism over independent kappa
 * values is capped by the NLQSL_THREADS environment variable. */
NLQSL_API nlqsl_status nlqsl_scenario_run(const nlqsl_scenario_config* cfg,
                                          char* manifest_path, size_t cap);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NLQSL_H */
