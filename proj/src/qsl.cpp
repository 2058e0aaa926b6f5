#include "qsl.hpp"

#include <cmath>
#include <stdexcept>

namespace nlqsl {

double qsl_numeric(const WaveFunction& psi, const PotentialFn& U, double t,
                   const NonlinearitySpec& nl) {
  if (std::abs(norm(psi) - 1.0) > 1e-6) {
    throw std::invalid_argument("qsl_numeric: state is not normalized");
  }
  const WaveFunction h_psi = apply_hamiltonian(psi, U, t, nl);
  return norm(h_psi) / (psi.hbar * psi.hbar);
}

QslTerms qsl_scale_invariant(double mu0, const LengthProtocol& protocol,
                             double t, double x2, double x4, double p2,
                             double mass, double hbar) {
  const double l = protocol.lambda(t);  // throws if lambda_t <= 0
  const double ld = protocol.lambda_dot(t);
  const double ldd = protocol.lambda_ddot(t);
  const double hbar2 = hbar * hbar;

  QslTerms out;
  out.lambda = l;
  out.lambda_dot = ld;
  out.lambda_ddot = ldd;
  out.mu_t = mu0 / (l * l);

  const double drive = ld * ld / (l * l) - ldd / l;
  out.term_mu = out.mu_t * out.mu_t / hbar2;
  out.term_x2 = mass * out.mu_t / hbar2 * drive * x2;
  out.term_x4 = mass * mass / (4.0 * hbar2) * drive * drive * x4;
  out.term_p2 = ld * ld / hbar2 * p2;
  out.total = out.term_mu + out.term_x2 + out.term_x4 + out.term_p2;
  return out;
}

QslTrace qsl_trace(const Trajectory& traj, const PotentialFn& U,
                   const NonlinearitySpec& nl) {
  QslTrace trace;
  trace.times = traj.times;
  trace.v_qsl.reserve(traj.states.size());
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    trace.v_qsl.push_back(
        qsl_numeric(traj.states[i], U, traj.times[i], nl));
  }
  return trace;
}

}  // namespace nlqsl
