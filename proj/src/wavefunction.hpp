#pragma once

#include <complex>
#include <vector>

#include "grid.hpp"

namespace nlqsl {

using Complex = std::complex<double>;

/// Complex-valued state psi(x) sampled on a SpatialGrid, together with the
/// physical constants (hbar, mass) that turn grid sums into observables.
/// Instances are plain values: copyable, immutable by convention after
/// construction, safe to share across threads.
struct WaveFunction {
  SpatialGrid grid;
  std::vector<Complex> amplitudes;
  double hbar = 1.0;
  double mass = 1.0;

  WaveFunction(SpatialGrid g, std::vector<Complex> amps, double hbar_,
               double mass_);
};

/// Squared L2 norm, sum_j |psi_j|^2 dx. Throws on non-finite amplitudes.
double norm(const WaveFunction& psi);

/// Position moment <x^n> for n in {1,2,3,4}; requires |norm-1| < 1e-6.
double moment_x(const WaveFunction& psi, int n);

/// Second momentum moment via the spectral derivative,
/// sum_k hbar^2 k^2 |psi_hat_k|^2 dk. If |psi| at either grid edge exceeds
/// 1e-6 the optional boundary_contamination flag is raised; the value is
/// still returned.
double moment_p2(const WaveFunction& psi,
                 bool* boundary_contamination = nullptr);

/// L2 distance sqrt(sum_j |psi_j - phi_j|^2 dx); grids must match.
double l2_distance(const WaveFunction& psi, const WaveFunction& phi);

/// |norm - 1| < 1e-8.
bool is_normalized(const WaveFunction& psi);

/// Returns a copy scaled to unit norm.
WaveFunction normalized(const WaveFunction& psi);

}  // namespace nlqsl
