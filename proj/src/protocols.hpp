#pragma once

namespace nlqsl {

/// Linear-in-time ramp of the squared trap frequency,
///   omega_t^2 = omega0^2 - (omega0^2 - omega1^2) t / tau.
struct HarmonicRamp {
  double omega0;
  double omega1;
  double tau;

  HarmonicRamp(double omega0_, double omega1_, double tau_);

  double omega_sq(double t) const noexcept;
};

/// External length/scale control lambda_t. Two variants:
///   Linear:   lambda_t = lambda0 + v t
///   SqrtForm: lambda_t = sqrt(a t^2 + 2 b t + c), c > 0
/// First and second derivatives are analytic; nothing is differenced
/// numerically. For SqrtForm, lddot * lambda^3 = a c - b^2 is constant,
/// which is what makes these protocols scale-invariant.
class LengthProtocol {
public:
  enum class Variant { Linear, SqrtForm };

  static LengthProtocol linear(double lambda0, double v);
  static LengthProtocol sqrt_form(double a, double b, double c);

  Variant variant() const noexcept { return variant_; }

  /// lambda_t; throws std::domain_error when the protocol is nonpositive.
  double lambda(double t) const;
  double lambda_dot(double t) const;
  double lambda_ddot(double t) const;

  /// The invariant lddot * lambda^3 (a c - b^2 for SqrtForm, 0 for Linear).
  double curvature() const noexcept;

  double lambda0() const { return lambda(0.0); }

  // Raw parameters (Linear: lambda0, v; SqrtForm: a, b, c).
  double p0() const noexcept { return p0_; }
  double p1() const noexcept { return p1_; }
  double p2() const noexcept { return p2_; }

private:
  LengthProtocol(Variant v, double p0, double p1, double p2);

  Variant variant_;
  double p0_, p1_, p2_;
};

}  // namespace nlqsl
