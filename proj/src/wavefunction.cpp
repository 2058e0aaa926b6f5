#include "wavefunction.hpp"

#include <cmath>
#include <stdexcept>

#include "fft.hpp"

namespace nlqsl {

WaveFunction::WaveFunction(SpatialGrid g, std::vector<Complex> amps,
                           double hbar_, double mass_)
    : grid(g), amplitudes(std::move(amps)), hbar(hbar_), mass(mass_) {
  if (amplitudes.size() != grid.size()) {
    throw std::invalid_argument(
        "WaveFunction: amplitude count does not match grid");
  }
  if (!(hbar > 0.0) || !(mass > 0.0)) {
    throw std::invalid_argument("WaveFunction: hbar and mass must be positive");
  }
}

double norm(const WaveFunction& psi) {
  double acc = 0.0;
  for (const Complex& a : psi.amplitudes) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw std::runtime_error("non-finite state");
    }
    acc += std::norm(a);
  }
  return acc * psi.grid.dx();
}

double moment_x(const WaveFunction& psi, int n) {
  if (n < 1 || n > 4) {
    throw std::invalid_argument("moment_x: order must be in {1,2,3,4}");
  }
  const double nrm = norm(psi);
  if (std::abs(nrm - 1.0) > 1e-6) {
    throw std::invalid_argument("moment_x: state is not normalized");
  }
  double acc = 0.0;
  for (std::size_t j = 0; j < psi.grid.size(); ++j) {
    acc += std::pow(psi.grid.x(j), n) * std::norm(psi.amplitudes[j]);
  }
  return acc * psi.grid.dx();
}

double moment_p2(const WaveFunction& psi, bool* boundary_contamination) {
  const std::size_t n = psi.grid.size();
  if (boundary_contamination) {
    const double edge = std::max(std::abs(psi.amplitudes.front()),
                                 std::abs(psi.amplitudes.back()));
    *boundary_contamination = edge > 1e-6;
  }
  Fft fft(n);
  std::vector<Complex> hat(n);
  fft.forward(psi.amplitudes.data(), hat.data());
  // sum_k hbar^2 k^2 |psi_hat_k|^2 dk with the DFT normalization folded in:
  // (dx/N) * sum_k k^2 |c_k|^2.
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double k = psi.grid.wavenumber(j);
    acc += k * k * std::norm(hat[j]);
  }
  const double scale =
      psi.hbar * psi.hbar * psi.grid.dx() / static_cast<double>(n);
  return acc * scale;
}

double l2_distance(const WaveFunction& psi, const WaveFunction& phi) {
  if (!(psi.grid == phi.grid)) {
    throw std::invalid_argument("l2_distance: grid mismatch");
  }
  double acc = 0.0;
  for (std::size_t j = 0; j < psi.grid.size(); ++j) {
    acc += std::norm(psi.amplitudes[j] - phi.amplitudes[j]);
  }
  return std::sqrt(acc * psi.grid.dx());
}

bool is_normalized(const WaveFunction& psi) {
  return std::abs(norm(psi) - 1.0) < 1e-8;
}

WaveFunction normalized(const WaveFunction& psi) {
  const double nrm = norm(psi);
  if (!(nrm > 0.0)) {
    throw std::runtime_error("normalized: zero-norm state");
  }
  WaveFunction out = psi;
  const double scale = 1.0 / std::sqrt(nrm);
  for (Complex& a : out.amplitudes) a *= scale;
  return out;
}

}  // namespace nlqsl
