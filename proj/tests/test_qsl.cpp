#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "propagator.hpp"
#include "qsl.hpp"
#include "scale_invariant.hpp"
#include "wavefunction.hpp"

using namespace nlqsl;

namespace {

WaveFunction random_smooth_state(const SpatialGrid& grid, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> amps(grid.size(), Complex(0, 0));
  for (int mode = -8; mode <= 8; ++mode) {
    const Complex c(gauss(rng), gauss(rng));
    for (std::size_t j = 0; j < grid.size(); ++j) {
      amps[j] += c * std::polar(1.0, 2.0 * M_PI * mode * grid.x(j) / grid.length());
    }
  }
  const double w = grid.length() / 7.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double u = grid.x(j) / w;
    amps[j] *= std::exp(-u * u);
  }
  return normalized(WaveFunction(grid, std::move(amps), 1.0, 1.0));
}

// Independent <H^2> via a double Hamiltonian application and the inner
// product <psi|H(H psi)>.
double h2_double_apply(const WaveFunction& psi, const PotentialFn& U, double t) {
  const NonlinearitySpec lin;
  const WaveFunction hpsi = apply_hamiltonian(psi, U, t, lin);
  const WaveFunction hhpsi = apply_hamiltonian(hpsi, U, t, lin);
  double acc = 0.0;
  for (std::size_t j = 0; j < psi.grid.size(); ++j) {
    acc += (std::conj(psi.amplitudes[j]) * hhpsi.amplitudes[j]).real();
  }
  return acc * psi.grid.dx();
}

}  // namespace

TEST_CASE("qsl_numeric on an eigenstate gives E^2/hbar^2") {
  const SpatialGrid grid(-8.0, 8.0, 1024);
  const WaveFunction psi = ground_state_gaussian(grid, 1.0, 5.0, 1.0);
  const PotentialFn U = make_static_harmonic_potential(5.0, 1.0);
  // ground state energy hbar omega0/2 = 2.5
  CHECK(qsl_numeric(psi, U, 0.0, NonlinearitySpec()) ==
        doctest::Approx(6.25).epsilon(1e-10));
}

TEST_CASE("qsl_numeric requires a normalized state") {
  const SpatialGrid grid(-8.0, 8.0, 256);
  WaveFunction psi = ground_state_gaussian(grid, 1.0, 5.0, 1.0);
  for (auto& a : psi.amplitudes) a *= 1.5;
  CHECK_THROWS_AS(qsl_numeric(psi, make_zero_potential(), 0.0,
                              NonlinearitySpec()),
                  std::invalid_argument);
}

TEST_CASE("linear identity: qsl_numeric equals <H^2>/hbar^2") {
  const SpatialGrid grid(-8.0, 8.0, 512);
  const PotentialFn U = make_static_harmonic_potential(3.0, 1.0);
  for (unsigned seed = 1; seed <= 5; ++seed) {
    const WaveFunction psi = random_smooth_state(grid, seed);
    const double v = qsl_numeric(psi, U, 0.0, NonlinearitySpec());
    const double h2 = h2_double_apply(psi, U, 0.0);
    CHECK(v >= 0.0);
    CHECK(v == doctest::Approx(h2).epsilon(1e-10));
  }
  // also under the time-dependent ramp at an interior time
  const HarmonicRamp ramp(5.0, 1.0, 2.0);
  const PotentialFn Ur = make_harmonic_potential(ramp, 1.0);
  const WaveFunction psi = random_smooth_state(grid, 42);
  CHECK(qsl_numeric(psi, Ur, 0.7, NonlinearitySpec()) ==
        doctest::Approx(h2_double_apply(psi, Ur, 0.7)).epsilon(1e-10));
}

TEST_CASE("scale-invariant speed: static limit keeps only the mu term") {
  const LengthProtocol still = LengthProtocol::linear(1.3, 0.0);
  const QslTerms q =
      qsl_scale_invariant(2.0, still, 5.0, 0.4, 0.3, 9.0, 1.0, 1.0);
  const double mu_t = 2.0 / (1.3 * 1.3);
  CHECK(q.term_mu == doctest::Approx(mu_t * mu_t).epsilon(1e-14));
  CHECK(q.term_x2 == 0.0);
  CHECK(q.term_x4 == 0.0);
  CHECK(q.term_p2 == 0.0);
  CHECK(q.total == doctest::Approx(q.term_mu));
}

TEST_CASE("scale-invariant speed: constant-rate expansion term by term") {
  // lambda_ddot = 0 drops every lddot contribution.
  const double mu0 = 3.0, v = 0.7, t = 1.5, m = 1.0, hbar = 1.0;
  const double x2 = 0.21, x4 = 0.09, p2 = 11.0;
  const LengthProtocol prot = LengthProtocol::linear(1.0, v);
  const double l = 1.0 + v * t;
  const double mu_t = mu0 / (l * l);
  const QslTerms q = qsl_scale_invariant(mu0, prot, t, x2, x4, p2, m, hbar);
  CHECK(q.lambda_ddot == 0.0);
  CHECK(q.term_mu == doctest::Approx(mu_t * mu_t).epsilon(1e-14));
  CHECK(q.term_x2 ==
        doctest::Approx(m * mu_t * v * v / (l * l) * x2).epsilon(1e-14));
  CHECK(q.term_x4 == doctest::Approx(m * m / 4.0 * std::pow(v / l, 4) * x4)
                         .epsilon(1e-14));
  CHECK(q.term_p2 == doctest::Approx(v * v * p2).epsilon(1e-14));
  CHECK(q.total >= 0.0);
}

TEST_CASE("breakdown sums to the total") {
  for (double mu0 : {0.5, 2.0}) {
    for (double t : {0.0, 0.4, 1.1}) {
      const LengthProtocol prot = LengthProtocol::sqrt_form(1.0, 0.3, 1.0);
      const QslTerms q =
          qsl_scale_invariant(mu0, prot, t, 0.3, 0.2, 7.0, 1.0, 1.0);
      const double sum = q.term_mu + q.term_x2 + q.term_x4 + q.term_p2;
      CHECK(q.total == doctest::Approx(sum).epsilon(1e-12));
    }
  }
}

TEST_CASE("scale-invariant speed matches qsl_numeric on the built solution") {
  // Free spreading of the unit-frequency Gaussian profile:
  // lambda_t = sqrt(1 + t^2). The exact speed is constant, 3/16.
  const LengthProtocol prot = LengthProtocol::sqrt_form(1.0, 0.0, 1.0);
  const ScaleInvariantSolution sol =
      make_harmonic_scale_solution(0.0, prot, 1.0, 1.0);
  const SpatialGrid grid(-12.0, 12.0, 2048);
  for (double t : {0.25, 0.5, 1.0}) {
    const WaveFunction psi = build_solution(sol, t, grid);
    const WaveFunction prof = profile_state(sol, t, grid);
    const double v_num =
        qsl_numeric(psi, make_zero_potential(), t, NonlinearitySpec());
    const QslTerms q =
        qsl_scale_invariant(sol.mu0, prot, t, moment_x(prof, 2),
                            moment_x(prof, 4), moment_p2(prof), 1.0, 1.0);
    CHECK(std::abs(v_num - q.total) / q.total < 1e-3);
    CHECK(q.total == doctest::Approx(3.0 / 16.0).epsilon(1e-10));
  }
}

TEST_CASE("qsl_trace starts at the initial <H^2>/hbar^2") {
  const SpatialGrid grid(-8.0, 8.0, 512);
  const HarmonicRamp ramp(5.0, 1.0, 2.0);
  const PotentialFn U = make_harmonic_potential(ramp, 1.0);
  const WaveFunction psi0 = ground_state_gaussian(grid, 1.0, 5.0, 1.0);
  const NonlinearitySpec lin;
  const Trajectory traj = propagate(psi0, U, lin, 0.2, 2e-4, 100);
  const QslTrace trace = qsl_trace(traj, U, lin);
  REQUIRE(trace.times.size() == traj.times.size());
  CHECK_FALSE(trace.has_breakdown());
  CHECK(trace.v_qsl.front() == doctest::Approx(6.25).epsilon(1e-9));
  for (double v : trace.v_qsl) CHECK(v >= 0.0);
}

TEST_CASE("speed at tau/2 grows with kappa and drops at fifth order") {
  const SpatialGrid grid(-8.0, 8.0, 512);
  const HarmonicRamp ramp(5.0, 1.0, 2.0);
  const PotentialFn U = make_harmonic_potential(ramp, 1.0);
  const WaveFunction psi0 = ground_state_gaussian(grid, 1.0, 5.0, 1.0);

  double prev = -1.0;
  double v_p1_10 = 0.0;
  for (double kappa : {0.0, 2.5, 5.0, 7.5, 10.0}) {
    const NonlinearitySpec nl =
        (kappa == 0.0) ? NonlinearitySpec() : NonlinearitySpec(1, kappa);
    const Trajectory traj = propagate(psi0, U, nl, 1.0, 2e-4, 1 << 30);
    const double v = qsl_numeric(traj.final_state(), U, 1.0, nl);
    CHECK(v > prev);
    prev = v;
    v_p1_10 = v;
  }
  const NonlinearitySpec quintic(2, 10.0);
  const Trajectory traj = propagate(psi0, U, quintic, 1.0, 2e-4, 1 << 30);
  CHECK(qsl_numeric(traj.final_state(), U, 1.0, quintic) < v_p1_10);
}
