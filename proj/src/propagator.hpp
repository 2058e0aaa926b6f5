#pragma once

#include <functional>
#include <vector>

#include "grid.hpp"
#include "protocols.hpp"
#include "wavefunction.hpp"

namespace nlqsl {

/// The interaction term kappa * |psi|^{2p} psi.
/// p = 0 is the linear Schroedinger equation (kappa forced to 0),
/// p = 1 the cubic (Gross-Pitaevskii) case, p = 2 the quintic one.
struct NonlinearitySpec {
  int p = 0;
  double kappa = 0.0;

  NonlinearitySpec() = default;
  NonlinearitySpec(int p_, double kappa_);

  bool is_linear() const noexcept { return p == 0 || kappa == 0.0; }
};

/// External potential U(x, t).
using PotentialFn = std::function<double(double x, double t)>;

/// U(x,t) = 1/2 m omega_t^2 x^2 with the ramp's omega_t^2.
double potential_harmonic(double x, double t, const HarmonicRamp& ramp,
                          double mass);
PotentialFn make_harmonic_potential(HarmonicRamp ramp, double mass);
PotentialFn make_static_harmonic_potential(double omega, double mass);
/// Scale-driven trap U(x,t) = 1/2 m omega0^2 x^2 (lambda_ref/lambda_t)^4,
/// i.e. the trap frequency follows omega0 * (lambda_ref/lambda_t)^2.
PotentialFn make_scaled_harmonic_potential(double omega0,
                                           LengthProtocol protocol,
                                           double mass);
PotentialFn make_zero_potential();

/// Ground state of the linear trap, (m w0 / pi hbar)^{1/4} exp(-m w0 x^2 / 2 hbar),
/// renormalized on the grid. Throws "grid too narrow" if the tail at either
/// edge exceeds 1e-8.
WaveFunction ground_state_gaussian(const SpatialGrid& grid, double mass,
                                   double omega0, double hbar);

/// H psi = [-hbar^2/(2m) d^2/dx^2 + U(x,t) + kappa |psi|^{2p}] psi,
/// kinetic term evaluated spectrally. Returns the (unnormalized) image.
WaveFunction apply_hamiltonian(const WaveFunction& psi, const PotentialFn& U,
                               double t, const NonlinearitySpec& nl);

/// One Strang step: half kinetic, full potential+nonlinear phase evaluated
/// at the interval midpoint t + dt/2, half kinetic. Each sub-step is a
/// pointwise phase in its diagonal basis, so the step is exactly
/// norm-preserving. Negative dt propagates backwards.
WaveFunction step_strang(const WaveFunction& psi, double t, double dt,
                         const PotentialFn& U, const NonlinearitySpec& nl);

struct TrajectoryMeta {
  double dt = 0.0;
  int sample_every = 1;
  NonlinearitySpec nl;
};

/// Time-ordered sequence of sampled states on a common grid.
struct Trajectory {
  std::vector<double> times;
  std::vector<WaveFunction> states;
  TrajectoryMeta meta;

  const WaveFunction& final_state() const { return states.back(); }
  double final_time() const { return times.back(); }
};

/// Repeated Strang stepping from t = 0 to t_final, recording every
/// sample_every-th state (plus the initial and final ones). The step count
/// is round(t_final/dt) and the step size is adjusted to cover t_final
/// exactly. Aborts with a diagnostic if the norm drifts by more than 1e-6.
Trajectory propagate(const WaveFunction& psi0, const PotentialFn& U,
                     const NonlinearitySpec& nl, double t_final, double dt,
                     int sample_every = 1);

}  // namespace nlqsl
