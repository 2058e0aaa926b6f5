#include "elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nlqsl {

namespace {

constexpr int kMaxAgmIterations = 32;
constexpr double kAgmTolerance = 1e-16;  // relative agreement of the means

void check_parameter(double nu, bool allow_one) {
  if (std::isnan(nu) || nu < 0.0 || (allow_one ? nu > 1.0 : nu >= 1.0)) {
    throw std::domain_error("elliptic: parameter nu outside domain");
  }
}

}  // namespace

double elliptic_k(double nu) {
  check_parameter(nu, /*allow_one=*/false);
  double a = 1.0;
  double g = std::sqrt(1.0 - nu);
  for (int i = 0; i < kMaxAgmIterations; ++i) {
    const double a_next = 0.5 * (a + g);
    const double g_next = std::sqrt(a * g);
    a = a_next;
    g = g_next;
    if (std::abs(a - g) <= kAgmTolerance * a) break;
  }
  return M_PI / (2.0 * a);
}

double elliptic_e(double nu) {
  check_parameter(nu, /*allow_one=*/true);
  if (nu == 1.0) return 1.0;
  // E = K * (1 - sum_n 2^{n-1} c_n^2), c_0 = sqrt(nu), c_{n+1} = (a_n-g_n)/2.
  double a = 1.0;
  double g = std::sqrt(1.0 - nu);
  double c2_sum = 0.5 * nu;
  double weight = 1.0;
  for (int i = 0; i < kMaxAgmIterations; ++i) {
    const double c = 0.5 * (a - g);
    const double a_next = 0.5 * (a + g);
    const double g_next = std::sqrt(a * g);
    a = a_next;
    g = g_next;
    c2_sum += weight * c * c;
    weight *= 2.0;
    if (std::abs(a - g) <= kAgmTolerance * a) break;
  }
  const double k_complete = M_PI / (2.0 * a);
  return k_complete * (1.0 - c2_sum);
}

namespace {

/// sn on the reduced range 0 <= u <= K(nu), 0 < nu < 1, by the AGM scale
/// sequence and backward phi recursion (A&S 16.4, 17.6).
double sn_agm(double u, double nu) {
  double a[kMaxAgmIterations + 1];
  double c[kMaxAgmIterations + 1];
  a[0] = 1.0;
  c[0] = std::sqrt(nu);
  double g = std::sqrt(1.0 - nu);
  int n = 0;
  while (n < kMaxAgmIterations) {
    const double a_next = 0.5 * (a[n] + g);
    const double c_next = 0.5 * (a[n] - g);
    const double g_next = std::sqrt(a[n] * g);
    ++n;
    a[n] = a_next;
    c[n] = c_next;
    g = g_next;
    if (std::abs(c[n]) <= kAgmTolerance * a[n]) break;
  }
  double phi = std::ldexp(a[n] * u, n);  // 2^n a_n u
  for (int i = n; i >= 1; --i) {
    phi = 0.5 * (phi + std::asin(std::clamp(c[i] * std::sin(phi) / a[i],
                                            -1.0, 1.0)));
  }
  return std::sin(phi);
}

}  // namespace

double jacobi_sn(double u, double nu) {
  check_parameter(nu, /*allow_one=*/true);
  if (nu == 0.0) return std::sin(u);
  if (nu == 1.0) return std::tanh(u);
  const double K = elliptic_k(nu);
  // Reduce to [0, K] using sn(-u) = -sn(u), period 4K, and sn(2K-u) = sn(u).
  double r = std::remainder(u, 4.0 * K);  // (-2K, 2K]
  double sign = 1.0;
  if (r < 0.0) {
    sign = -1.0;
    r = -r;
  }
  if (r > K) r = 2.0 * K - r;  // may land slightly below 0 for r near 2K
  if (r < 0.0) r = 0.0;
  return sign * sn_agm(r, nu);
}

double jacobi_sn_series(double u, double nu) {
  const double s = std::sin(u);
  const double c = std::cos(u);
  return s - 0.25 * nu * (u - s * c) * c;
}

EllipticParams::EllipticParams(double nu_)
    : nu(nu_), K(elliptic_k(nu_)), E(elliptic_e(nu_)) {}

}  // namespace nlqsl
