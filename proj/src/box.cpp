#include "box.hpp"

#include <cmath>
#include <stdexcept>

#include "quadrature.hpp"

namespace nlqsl {

namespace {

void check_box_args(int n, double lambda) {
  if (n < 1) throw std::invalid_argument("box: quantum number n must be >= 1");
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("box: lambda must be positive");
  }
}

}  // namespace

double box_energy(int n, double lambda, double mass, double hbar) {
  check_box_args(n, lambda);
  const double npi = static_cast<double>(n) * M_PI;
  return hbar * hbar * npi * npi / (2.0 * mass * lambda * lambda);
}

LinearEigenstate linear_eigenstate(int n, double lambda,
                                   const SpatialGrid& grid, double hbar,
                                   double mass) {
  check_box_args(n, lambda);
  const double amp = std::sqrt(2.0 / lambda);
  const double kn = static_cast<double>(n) * M_PI / lambda;
  std::vector<Complex> amps(grid.size(), Complex(0.0, 0.0));
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.x(j);
    if (x >= 0.0 && x <= lambda) amps[j] = amp * std::sin(kn * x);
  }
  return LinearEigenstate{WaveFunction(grid, std::move(amps), hbar, mass),
                          box_energy(n, lambda, mass, hbar)};
}

double solve_nu(double kappa, double lambda, double mass, int n, double hbar) {
  check_box_args(n, lambda);
  if (kappa < 0.0) {
    throw std::invalid_argument(
        "solve_nu: attractive nonlinearity (kappa < 0) is not supported");
  }
  if (kappa == 0.0) return 0.0;

  const double target =
      mass * lambda * kappa / (4.0 * n * n * hbar * hbar);
  const auto f = [](double nu) {
    const double K = elliptic_k(nu);
    return K * (K - elliptic_e(nu));
  };

  double lo = 0.0;
  double hi = 1.0 - 1e-12;
  if (f(hi) < target) {
    throw std::domain_error("solve_nu: kappa beyond the bisection bracket");
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

WaveFunction stationary_state(int n, double lambda, double nu,
                              const SpatialGrid& grid, double hbar,
                              double mass) {
  check_box_args(n, lambda);
  if (nu == 0.0) return linear_eigenstate(n, lambda, grid, hbar, mass).state;
  if (!(nu > 0.0) || !(nu < 1.0)) {
    throw std::domain_error("stationary_state: nu must lie in [0, 1)");
  }
  const EllipticParams ep(nu);
  const double amp = std::sqrt(nu * ep.K / (lambda * (ep.K - ep.E)));
  const double scale = 2.0 * static_cast<double>(n) * ep.K / lambda;
  std::vector<Complex> amps(grid.size(), Complex(0.0, 0.0));
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.x(j);
    if (x >= 0.0 && x <= lambda) amps[j] = amp * jacobi_sn(scale * x, nu);
  }
  WaveFunction psi(grid, std::move(amps), hbar, mass);
  return normalized(psi);
}

double chemical_potential_exact(int n, double lambda, double nu, double mass,
                                double hbar) {
  check_box_args(n, lambda);
  const double two_k = 2.0 * elliptic_k(nu);
  return hbar * hbar / (2.0 * mass * lambda * lambda) * n * n * two_k * two_k *
         (1.0 + nu);
}

double chemical_potential_perturbative(int n, double lambda, double kappa,
                                       double mass, double hbar) {
  return box_energy(n, lambda, mass, hbar) + 1.5 * kappa / lambda;
}

double box_p2_exact(double lambda, double nu, double hbar) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("box_p2_exact: lambda must be positive");
  }
  const double pi_sq = M_PI * M_PI;
  if (nu == 0.0) return hbar * hbar * pi_sq / (lambda * lambda);
  const EllipticParams ep(nu);
  const double two_k = 2.0 * ep.K;
  const double bracket = ep.K * (nu - 1.0) + ep.E * (nu + 1.0);
  return hbar * hbar * two_k * two_k /
         (3.0 * lambda * lambda * (ep.K - ep.E)) * bracket;
}

BoxMoments box_moments_exact(double lambda, double nu, double hbar) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("box_moments_exact: lambda must be positive");
  }
  BoxMoments out;
  out.p2 = box_p2_exact(lambda, nu, hbar);
  const double pi_sq = M_PI * M_PI;
  if (nu == 0.0) {
    out.x2 = lambda * lambda * (1.0 / 3.0 - 0.5 / pi_sq);
    out.x4 = lambda * lambda * lambda * lambda *
             (0.2 - 1.0 / pi_sq + 1.5 / (pi_sq * pi_sq));
    return out;
  }
  const EllipticParams ep(nu);
  const double scale = 2.0 * ep.K / lambda;  // ground state, n = 1
  const auto density = [&](double x) {
    const double s = jacobi_sn(scale * x, nu);
    return s * s;
  };
  const double w0 = integrate_adaptive(density, 0.0, lambda, 1e-12 * lambda);
  const double w2 = integrate_adaptive(
      [&](double x) { return x * x * density(x); }, 0.0, lambda,
      1e-12 * std::pow(lambda, 3));
  const double w4 = integrate_adaptive(
      [&](double x) { return x * x * x * x * density(x); }, 0.0, lambda,
      1e-12 * std::pow(lambda, 5));
  out.x2 = w2 / w0;
  out.x4 = w4 / w0;
  return out;
}

BoxMoments box_moments_perturbative(double kappa, double lambda, double mass,
                                    double hbar) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument(
        "box_moments_perturbative: lambda must be positive");
  }
  const double pi_sq = M_PI * M_PI;
  const double pi_4 = pi_sq * pi_sq;
  const double pi_6 = pi_4 * pi_sq;
  const double hbar_sq = hbar * hbar;
  const double l2 = lambda * lambda;
  BoxMoments out;
  out.x2 = l2 * (1.0 / 3.0 - 0.5 / pi_sq) +
           3.0 * mass * l2 * lambda * kappa / (32.0 * hbar_sq * pi_4);
  out.x4 = l2 * l2 * (0.2 - 1.0 / pi_sq + 1.5 / pi_4) +
           3.0 * (8.0 * pi_sq - 15.0) * mass * l2 * l2 * lambda * kappa /
               (128.0 * hbar_sq * pi_6);
  out.p2 = hbar_sq * pi_sq / l2 +
           mass * mass * kappa * kappa / (8.0 * hbar_sq * pi_sq);
  return out;
}

double normalization_perturbative(double lambda, double nu) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument(
        "normalization_perturbative: lambda must be positive");
  }
  return std::sqrt(2.0 / lambda) - nu / (8.0 * std::sqrt(2.0 * lambda));
}

BoxEigenSolution solve_box_eigensolution(int n, double lambda, double kappa,
                                         double mass, double hbar,
                                         BoxMode regime) {
  BoxEigenSolution sol;
  sol.n = n;
  sol.lambda = lambda;
  sol.regime = regime;
  sol.nu = solve_nu(kappa, lambda, mass, n, hbar);
  if (regime == BoxMode::Exact) {
    sol.mu = chemical_potential_exact(n, lambda, sol.nu, mass, hbar);
    if (sol.nu == 0.0) {
      sol.normalization = std::sqrt(2.0 / lambda);
    } else {
      const EllipticParams ep(sol.nu);
      sol.normalization =
          std::sqrt(sol.nu * ep.K / (lambda * (ep.K - ep.E)));
    }
  } else {
    sol.mu = chemical_potential_perturbative(n, lambda, kappa, mass, hbar);
    sol.normalization = normalization_perturbative(lambda, sol.nu);
  }
  return sol;
}

QslTerms qsl_box(double kappa, double lambda0, double v, double t, double mass,
                 double hbar, BoxMode mode) {
  const LengthProtocol protocol = LengthProtocol::linear(lambda0, v);
  const double lt = protocol.lambda(t);  // throws if <= 0

  const double nu = solve_nu(kappa, lambda0, mass, 1, hbar);
  const double mu_l0 =
      (mode == BoxMode::Exact)
          ? chemical_potential_exact(1, lambda0, nu, mass, hbar)
          : chemical_potential_perturbative(1, lambda0, kappa, mass, hbar);
  // qsl_scale_invariant forms mu_t = mu0 / lambda_t^2 with mu0 referenced
  // to unit scale, hence the lambda0^2 factor (identity when lambda0 = 1).
  const double mu0_unit = mu_l0 * lambda0 * lambda0;

  BoxMoments m;
  if (mode == BoxMode::Exact) {
    m = box_moments_exact(lt, nu, hbar);
  } else {
    // Scale-invariant driving carries the coupling as kappa lambda0/lambda_t,
    // which keeps nu constant along the expansion.
    const double kappa_eff = kappa * lambda0 / lt;
    m = box_moments_perturbative(kappa_eff, lt, mass, hbar);
  }
  return qsl_scale_invariant(mu0_unit, protocol, t, m.x2, m.x4, m.p2, mass,
                             hbar);
}

}  // namespace nlqsl
