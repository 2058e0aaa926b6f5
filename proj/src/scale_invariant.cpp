#include "scale_invariant.hpp"

#include <cmath>
#include <stdexcept>

#include "box.hpp"
#include "elliptic.hpp"
#include "quadrature.hpp"

namespace nlqsl {

ScaleInvariantSolution make_harmonic_scale_solution(
    double omega_drive, const LengthProtocol& protocol, double mass,
    double hbar, double scaling_exponent) {
  if (omega_drive < 0.0) {
    throw std::invalid_argument("harmonic scale solution: omega_drive < 0");
  }
  const double lref = protocol.lambda0();
  const double lref4 = lref * lref * lref * lref;
  const double omega_eff_sq =
      omega_drive * omega_drive + protocol.curvature() / lref4;
  if (!(omega_eff_sq > 0.0)) {
    throw std::invalid_argument(
        "harmonic scale solution: comoving frequency is not positive");
  }
  const double omega_eff = std::sqrt(omega_eff_sq);
  const double alpha = mass * omega_eff / hbar;
  const double amplitude = std::pow(alpha / M_PI, 0.25);

  ScaleInvariantSolution sol;
  sol.profile = [amplitude, alpha](double y) {
    return Complex(amplitude * std::exp(-0.5 * alpha * y * y), 0.0);
  };
  sol.base_potential = [omega_drive, mass](double y) {
    return 0.5 * mass * omega_drive * omega_drive * y * y;
  };
  sol.mu0 = 0.5 * hbar * omega_eff;
  sol.protocol = protocol;
  sol.nl = NonlinearitySpec(0, 0.0);
  sol.scaling_exponent = scaling_exponent;
  sol.hbar = hbar;
  sol.mass = mass;
  return sol;
}

ScaleInvariantSolution make_box_scale_solution(double kappa,
                                               const LengthProtocol& protocol,
                                               double mass, double hbar,
                                               double scaling_exponent) {
  if (protocol.curvature() != 0.0) {
    throw std::invalid_argument(
        "box scale solution: requires a zero-curvature protocol");
  }
  const double lref = protocol.lambda0();
  const double nu = solve_nu(kappa, lref, mass, 1, hbar);

  ScaleInvariantSolution sol;
  if (nu == 0.0) {
    const double amp = std::sqrt(2.0 / lref);
    const double k1 = M_PI / lref;
    sol.profile = [amp, k1](double y) {
      return Complex(amp * std::sin(k1 * y), 0.0);
    };
    sol.mu0 = box_energy(1, lref, mass, hbar);
  } else {
    const EllipticParams ep(nu);
    const double amp = std::sqrt(nu * ep.K / (lref * (ep.K - ep.E)));
    const double scale = 2.0 * ep.K / lref;
    // Odd-periodic continuation: sn itself, no truncation at the walls.
    sol.profile = [amp, scale, nu](double y) {
      return Complex(amp * jacobi_sn(scale * y, nu), 0.0);
    };
    sol.mu0 = chemical_potential_exact(1, lref, nu, mass, hbar);
  }
  sol.base_potential = [](double) { return 0.0; };
  sol.protocol = protocol;
  sol.nl = (kappa == 0.0) ? NonlinearitySpec(0, 0.0) : NonlinearitySpec(1, kappa);
  sol.scaling_exponent = scaling_exponent;
  sol.hbar = hbar;
  sol.mass = mass;
  return sol;
}

double tau_integral(const LengthProtocol& protocol, double t) {
  if (t == 0.0) return 0.0;
  const auto integrand = [&protocol](double s) {
    const double l = protocol.lambda(s);  // throws on a root in the window
    return 1.0 / (l * l);
  };
  return integrate_adaptive(integrand, 0.0, t, 1e-10);
}

namespace {

double scale_factor(const ScaleInvariantSolution& sol, double t) {
  return sol.protocol.lambda(t) / sol.protocol.lambda0();
}

}  // namespace

WaveFunction build_solution(const ScaleInvariantSolution& sol, double t,
                            const SpatialGrid& grid) {
  const double lref = sol.protocol.lambda0();
  const double b = scale_factor(sol, t);
  const double l = sol.protocol.lambda(t);
  const double ld = sol.protocol.lambda_dot(t);
  // tau relative to the scale factor b_s: integral ds/b^2 = lref^2 tau(t).
  const double tau_b = lref * lref * tau_integral(sol.protocol, t);
  const double global = -sol.mu0 * tau_b / sol.hbar;
  const double quad = sol.mass * ld / (2.0 * sol.hbar * l);
  const double bs = std::pow(b, sol.scaling_exponent);

  std::vector<Complex> amps(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.x(j);
    const Complex phi = sol.profile(x / b) / bs;
    amps[j] = std::polar(1.0, global + quad * x * x) * phi;
  }
  return WaveFunction(grid, std::move(amps), sol.hbar, sol.mass);
}

WaveFunction profile_state(const ScaleInvariantSolution& sol, double t,
                           const SpatialGrid& grid) {
  const double b = scale_factor(sol, t);
  const double bs = std::pow(b, sol.scaling_exponent);
  std::vector<Complex> amps(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    amps[j] = sol.profile(grid.x(j) / b) / bs;
  }
  return WaveFunction(grid, std::move(amps), sol.hbar, sol.mass);
}

PotentialFn driven_potential(const ScaleInvariantSolution& sol) {
  const LengthProtocol protocol = sol.protocol;
  const std::function<double(double)> base = sol.base_potential;
  const double lref = protocol.lambda0();
  return [protocol, base, lref](double x, double t) {
    const double b = protocol.lambda(t) / lref;
    return base(x / b) / (b * b);
  };
}

NonlinearitySpec driven_nonlinearity(const ScaleInvariantSolution& sol,
                                     double t) {
  if (sol.nl.is_linear()) return sol.nl;
  return NonlinearitySpec(sol.nl.p, sol.nl.kappa / scale_factor(sol, t));
}

ResidualReport verify_solution(const ScaleInvariantSolution& sol, double t,
                               const SpatialGrid& grid,
                               double interior_fraction) {
  if (!(interior_fraction > 0.0) || interior_fraction > 1.0) {
    throw std::invalid_argument("verify_solution: bad interior fraction");
  }
  constexpr double kFdDt = 1e-6;

  const WaveFunction psi = build_solution(sol, t, grid);
  const WaveFunction psi_m = build_solution(sol, t - kFdDt, grid);
  const WaveFunction psi_p = build_solution(sol, t + kFdDt, grid);
  const WaveFunction h_psi = apply_hamiltonian(psi, driven_potential(sol), t,
                                               driven_nonlinearity(sol, t));

  const double x_center = 0.5 * (grid.x_min() + grid.x_max());
  const double half_window = 0.5 * interior_fraction * grid.length();

  double res2 = 0.0;
  double ref2 = 0.0;
  const Complex i_hbar(0.0, sol.hbar);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (std::abs(grid.x(j) - x_center) > half_window) continue;
    const Complex dpsi =
        (psi_p.amplitudes[j] - psi_m.amplitudes[j]) / (2.0 * kFdDt);
    const Complex r = i_hbar * dpsi - h_psi.amplitudes[j];
    res2 += std::norm(r);
    ref2 += std::norm(h_psi.amplitudes[j]);
  }
  ResidualReport report;
  report.interior_fraction = interior_fraction;
  report.l2_abs = std::sqrt(res2 * grid.dx());
  report.l2_rel = (ref2 > 0.0) ? std::sqrt(res2 / ref2) : 0.0;
  return report;
}

}  // namespace nlqsl
