#pragma once

#include <vector>

#include "propagator.hpp"
#include "protocols.hpp"
#include "wavefunction.hpp"

namespace nlqsl {

/// Speed of evolution v = integral |d psi/dt|^2 dx, evaluated through the
/// equation of motion: d psi/dt = -(i/hbar) [T + U + kappa|psi|^{2p}] psi,
/// so v = norm(H psi) / hbar^2 with no time differencing involved.
/// Requires a normalized state.
double qsl_numeric(const WaveFunction& psi, const PotentialFn& U, double t,
                   const NonlinearitySpec& nl);

/// Breakdown of the closed-form scale-invariant speed into its four
/// summands; total is their exact sum.
struct QslTerms {
  double total = 0.0;
  double term_mu = 0.0;   // mu_t^2 / hbar^2
  double term_x2 = 0.0;   // m mu_t/hbar^2 (ldot^2/l^2 - lddot/l) <x^2>
  double term_x4 = 0.0;   // m^2/(4 hbar^2) (ldot^2/l^2 - lddot/l)^2 <x^4>
  double term_p2 = 0.0;   // ldot^2/hbar^2 <p^2>
  double lambda = 0.0;
  double lambda_dot = 0.0;
  double lambda_ddot = 0.0;
  double mu_t = 0.0;
};

/// Closed-form speed for scale-invariant driving. mu0 is the chemical
/// potential of the stationary profile at unit scale; the instantaneous
/// value is mu_t = mu0 / lambda_t^2. The moments x2, x4, p2 are those of
/// the rescaled profile at lambda_t. lambda_dot and lambda_ddot come
/// analytically from the protocol.
QslTerms qsl_scale_invariant(double mu0, const LengthProtocol& protocol,
                             double t, double x2, double x4, double p2,
                             double mass, double hbar);

/// Time series of speeds, with an optional per-term breakdown populated by
/// the scale-invariant evaluators (empty for propagator traces).
struct QslTrace {
  std::vector<double> times;
  std::vector<double> v_qsl;
  std::vector<double> term_mu, term_x2, term_x4, term_p2;

  bool has_breakdown() const noexcept { return !term_mu.empty(); }
};

/// qsl_numeric applied at each sampled state of the trajectory.
QslTrace qsl_trace(const Trajectory& traj, const PotentialFn& U,
                   const NonlinearitySpec& nl);

}  // namespace nlqsl
