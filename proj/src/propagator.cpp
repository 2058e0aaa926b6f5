#include "propagator.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fft.hpp"

namespace nlqsl {

NonlinearitySpec::NonlinearitySpec(int p_, double kappa_) : p(p_), kappa(kappa_) {
  if (p < 0 || p > 2) {
    throw std::invalid_argument("NonlinearitySpec: order p must be 0, 1 or 2");
  }
  if (kappa < 0.0) {
    throw std::invalid_argument("NonlinearitySpec: kappa must be nonnegative");
  }
  if (p == 0) kappa = 0.0;
}

double potential_harmonic(double x, double t, const HarmonicRamp& ramp,
                          double mass) {
  return 0.5 * mass * ramp.omega_sq(t) * x * x;
}

PotentialFn make_harmonic_potential(HarmonicRamp ramp, double mass) {
  return [ramp, mass](double x, double t) {
    return potential_harmonic(x, t, ramp, mass);
  };
}

PotentialFn make_static_harmonic_potential(double omega, double mass) {
  const double c = 0.5 * mass * omega * omega;
  return [c](double x, double) { return c * x * x; };
}

PotentialFn make_scaled_harmonic_potential(double omega0,
                                           LengthProtocol protocol,
                                           double mass) {
  const double lambda_ref = protocol.lambda0();
  return [omega0, protocol, mass, lambda_ref](double x, double t) {
    const double b = protocol.lambda(t) / lambda_ref;
    const double w = omega0 / (b * b);
    return 0.5 * mass * w * w * x * x;
  };
}

PotentialFn make_zero_potential() {
  return [](double, double) { return 0.0; };
}

WaveFunction ground_state_gaussian(const SpatialGrid& grid, double mass,
                                   double omega0, double hbar) {
  if (!(omega0 > 0.0)) {
    throw std::invalid_argument("ground_state_gaussian: omega0 must be positive");
  }
  const double alpha = mass * omega0 / hbar;
  const double amplitude = std::pow(alpha / M_PI, 0.25);
  std::vector<Complex> amps(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.x(j);
    amps[j] = amplitude * std::exp(-0.5 * alpha * x * x);
  }
  const double tail = std::max(std::abs(amps.front()), std::abs(amps.back()));
  if (tail >= 1e-8) {
    throw std::invalid_argument("grid too narrow");
  }
  WaveFunction psi(grid, std::move(amps), hbar, mass);
  return normalized(psi);
}

namespace {

double nonlinear_term(const NonlinearitySpec& nl, double abs2) {
  switch (nl.p) {
    case 1:
      return nl.kappa * abs2;
    case 2:
      return nl.kappa * abs2 * abs2;
    default:
      return 0.0;
  }
}

}  // namespace

WaveFunction apply_hamiltonian(const WaveFunction& psi, const PotentialFn& U,
                               double t, const NonlinearitySpec& nl) {
  const std::size_t n = psi.grid.size();
  Fft fft(n);
  std::vector<Complex> kin(n);
  fft.forward(psi.amplitudes.data(), kin.data());
  const double kfac = psi.hbar * psi.hbar / (2.0 * psi.mass);
  for (std::size_t j = 0; j < n; ++j) {
    const double k = psi.grid.wavenumber(j);
    kin[j] *= kfac * k * k;
  }
  fft.backward(kin.data(), kin.data());
  for (std::size_t j = 0; j < n; ++j) {
    const double x = psi.grid.x(j);
    const Complex a = psi.amplitudes[j];
    kin[j] += (U(x, t) + nonlinear_term(nl, std::norm(a))) * a;
    if (!std::isfinite(kin[j].real()) || !std::isfinite(kin[j].imag())) {
      throw std::runtime_error("non-finite state");
    }
  }
  return WaveFunction(psi.grid, std::move(kin), psi.hbar, psi.mass);
}

namespace {

struct StrangWorkspace {
  Fft fft;
  std::vector<Complex> kinetic_phase;
  double cached_dt = std::numeric_limits<double>::quiet_NaN();

  explicit StrangWorkspace(std::size_t n) : fft(n), kinetic_phase(n) {}

  void refresh_kinetic(const WaveFunction& psi, double dt) {
    if (dt == cached_dt) return;
    const double fac = psi.hbar * dt / (4.0 * psi.mass);
    for (std::size_t j = 0; j < kinetic_phase.size(); ++j) {
      const double k = psi.grid.wavenumber(j);
      kinetic_phase[j] = std::polar(1.0, -fac * k * k);
    }
    cached_dt = dt;
  }
};

void strang_step_inplace(std::vector<Complex>& amps, const WaveFunction& ref,
                         double t, double dt, const PotentialFn& U,
                         const NonlinearitySpec& nl, StrangWorkspace& ws) {
  ws.refresh_kinetic(ref, dt);
  const std::size_t n = amps.size();

  ws.fft.forward(amps);
  for (std::size_t j = 0; j < n; ++j) amps[j] *= ws.kinetic_phase[j];
  ws.fft.backward(amps);

  const double tm = t + 0.5 * dt;
  const double pf = dt / ref.hbar;
  for (std::size_t j = 0; j < n; ++j) {
    const double x = ref.grid.x(j);
    const double phase = (U(x, tm) + nonlinear_term(nl, std::norm(amps[j]))) * pf;
    amps[j] *= std::polar(1.0, -phase);
  }

  ws.fft.forward(amps);
  for (std::size_t j = 0; j < n; ++j) amps[j] *= ws.kinetic_phase[j];
  ws.fft.backward(amps);
}

}  // namespace

WaveFunction step_strang(const WaveFunction& psi, double t, double dt,
                         const PotentialFn& U, const NonlinearitySpec& nl) {
  if (dt == 0.0) throw std::invalid_argument("step_strang: dt must be nonzero");
  StrangWorkspace ws(psi.grid.size());
  std::vector<Complex> amps = psi.amplitudes;
  strang_step_inplace(amps, psi, t, dt, U, nl, ws);
  return WaveFunction(psi.grid, std::move(amps), psi.hbar, psi.mass);
}

Trajectory propagate(const WaveFunction& psi0, const PotentialFn& U,
                     const NonlinearitySpec& nl, double t_final, double dt,
                     int sample_every) {
  if (!(dt > 0.0) || !(t_final > 0.0)) {
    throw std::invalid_argument("propagate: t_final and dt must be positive");
  }
  if (sample_every < 1) {
    throw std::invalid_argument("propagate: sample_every must be >= 1");
  }

  const long long n_steps = std::llround(t_final / dt);
  if (n_steps < 1) {
    throw std::invalid_argument("propagate: t_final shorter than one step");
  }
  const double dt_eff = t_final / static_cast<double>(n_steps);

  // Stability heuristic on the initial data: the position-space phase per
  // step must stay well below pi.
  double vmax = 0.0;
  for (std::size_t j = 0; j < psi0.grid.size(); ++j) {
    const double v = std::abs(U(psi0.grid.x(j), 0.0)) +
                     nonlinear_term(nl, std::norm(psi0.amplitudes[j]));
    vmax = std::max(vmax, v);
  }
  if (dt_eff * vmax / psi0.hbar >= 0.5) {
    throw std::invalid_argument(
        "propagate: dt violates the stability heuristic dt*max|V|/hbar < 0.5");
  }

  const double norm0 = norm(psi0);

  Trajectory traj;
  traj.meta = TrajectoryMeta{dt_eff, sample_every, nl};
  traj.times.push_back(0.0);
  traj.states.push_back(psi0);

  StrangWorkspace ws(psi0.grid.size());
  std::vector<Complex> amps = psi0.amplitudes;

  for (long long step = 0; step < n_steps; ++step) {
    const double t = static_cast<double>(step) * dt_eff;
    strang_step_inplace(amps, psi0, t, dt_eff, U, nl, ws);

    const bool is_last = (step + 1 == n_steps);
    if (is_last || (step + 1) % sample_every == 0) {
      WaveFunction snap(psi0.grid, amps, psi0.hbar, psi0.mass);
      const double nrm = norm(snap);
      if (std::abs(nrm - norm0) > 1e-6) {
        std::ostringstream msg;
        msg << "propagate: norm drift " << std::abs(nrm - norm0)
            << " at t = " << static_cast<double>(step + 1) * dt_eff
            << " exceeds 1e-6";
        throw std::runtime_error(msg.str());
      }
      traj.times.push_back(static_cast<double>(step + 1) * dt_eff);
      traj.states.push_back(std::move(snap));
    }
  }
  return traj;
}

}  // namespace nlqsl
