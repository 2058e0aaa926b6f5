#pragma once

namespace nlqsl {

// Complete elliptic integrals and the Jacobi sn function in the PARAMETER
// convention of Abramowitz & Stegun, ch. 16/17: the second argument is the
// parameter nu = m = k^2, NOT the modulus k. All routines below take nu.

/// K(nu), complete elliptic integral of the first kind, for 0 <= nu < 1.
/// Computed by arithmetic-geometric mean iteration; relative error < 1e-14.
double elliptic_k(double nu);

/// E(nu), complete elliptic integral of the second kind, for 0 <= nu <= 1.
/// E(1) = 1 is returned exactly.
double elliptic_e(double nu);

/// sn(u|nu) for 0 <= nu <= 1, via the descending Landen (Gauss) transform
/// with range reduction over the 4K period. Absolute error < 1e-12 for
/// |u| <= 4K(nu).
double jacobi_sn(double u, double nu);

/// First-order small-nu expansion
///   sn(u|nu) ~ sin u - (nu/4) (u - sin u cos u) cos u,
/// intended for nu <= 0.1; used to validate jacobi_sn and the perturbative
/// box states.
double jacobi_sn_series(double u, double nu);

/// nu with its cached K(nu), E(nu).
struct EllipticParams {
  double nu;
  double K;
  double E;

  explicit EllipticParams(double nu_);
};

}  // namespace nlqsl
