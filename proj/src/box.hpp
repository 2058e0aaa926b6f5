#pragma once

#include "elliptic.hpp"
#include "grid.hpp"
#include "qsl.hpp"
#include "wavefunction.hpp"

namespace nlqsl {

/// E_n(lambda) = hbar^2 pi^2 n^2 / (2 m lambda^2).
double box_energy(int n, double lambda, double mass, double hbar);

struct LinearEigenstate {
  WaveFunction state;
  double energy;
};

/// sqrt(2/lambda) sin(n pi x / lambda) on [0, lambda], hard zeros outside.
LinearEigenstate linear_eigenstate(int n, double lambda,
                                   const SpatialGrid& grid, double hbar = 1.0,
                                   double mass = 1.0);

/// Root of K(nu)(K(nu)-E(nu)) = m lambda kappa / (4 n^2 hbar^2) in [0,1),
/// by bisection on the strictly increasing left side. kappa = 0 gives
/// nu = 0 exactly; kappa < 0 (attractive) is rejected.
double solve_nu(double kappa, double lambda, double mass, int n, double hbar);

/// Stationary profile A sn(2 n K(nu) x / lambda | nu) sampled on [0, lambda]
/// with zeros outside, renormalized on the grid (correction < 1e-6).
/// nu = 0 falls back to the linear eigenstate.
WaveFunction stationary_state(int n, double lambda, double nu,
                              const SpatialGrid& grid, double hbar = 1.0,
                              double mass = 1.0);

/// mu_n(lambda) = hbar^2/(2 m lambda^2) n^2 (2K(nu))^2 (1+nu).
double chemical_potential_exact(int n, double lambda, double nu, double mass,
                                double hbar);

/// First order in kappa: E_n(lambda) + 3 kappa / (2 lambda).
double chemical_potential_perturbative(int n, double lambda, double kappa,
                                       double mass, double hbar);

/// Ground-state <p^2> in closed form,
///   hbar^2 (2K)^2 / (3 lambda^2 (K-E)) [K(nu-1) + E(nu+1)],
/// reducing to hbar^2 pi^2 / lambda^2 at nu = 0.
double box_p2_exact(double lambda, double nu, double hbar);

struct BoxMoments {
  double x2 = 0.0;
  double x4 = 0.0;
  double p2 = 0.0;
};

/// Ground-state <x^2>, <x^4> of the exact profile by adaptive quadrature
/// over [0, lambda] (normalization integral divided out); p2 from the
/// closed form.
BoxMoments box_moments_exact(double lambda, double nu, double hbar = 1.0);

/// First-order moments for the ground state:
///   <x^2> = lambda^2 (1/3 - 1/(2 pi^2)) + 3 m lambda^3 kappa / (32 hbar^2 pi^4)
///   <x^4> = lambda^4 (1/5 - 1/pi^2 + 3/(2 pi^4))
///           + 3 (8 pi^2 - 15) m lambda^5 kappa / (128 hbar^2 pi^6)
///   <p^2> = hbar^2 pi^2 / lambda^2 + m^2 kappa^2 / (8 hbar^2 pi^2)
/// Valid for small kappa (nu <~ 0.05).
BoxMoments box_moments_perturbative(double kappa, double lambda, double mass,
                                    double hbar);

/// A_1 to first order in nu: sqrt(2/lambda) - nu / (8 sqrt(2 lambda)).
double normalization_perturbative(double lambda, double nu);

enum class BoxMode { Exact, Perturbative };

/// Ground-state eigenproblem summary at fixed (kappa, lambda).
struct BoxEigenSolution {
  int n = 1;
  double lambda = 1.0;
  double nu = 0.0;
  double mu = 0.0;
  double normalization = 0.0;
  BoxMode regime = BoxMode::Exact;
};

BoxEigenSolution solve_box_eigensolution(int n, double lambda, double kappa,
                                         double mass, double hbar,
                                         BoxMode regime = BoxMode::Exact);

/// Speed of the box expanded at constant rate, lambda_t = lambda0 + v t,
/// assembled from the closed-form scale-invariant expression with
/// lambda_ddot = 0. The profile shape (nu) is frozen at its initial value,
/// which is what constant-rate scale-invariant driving does to the
/// coupling; mu_t = mu(lambda0) lambda0^2 / lambda_t^2, and the moments are
/// evaluated at lambda_t through the mode-selected path.
QslTerms qsl_box(double kappa, double lambda0, double v, double t, double mass,
                 double hbar, BoxMode mode);

}  // namespace nlqsl
