#include "protocols.hpp"

#include <cmath>
#include <stdexcept>

namespace nlqsl {

HarmonicRamp::HarmonicRamp(double omega0_, double omega1_, double tau_)
    : omega0(omega0_), omega1(omega1_), tau(tau_) {
  if (!(omega0 > 0.0) || !(omega1 > 0.0) || !(tau > 0.0)) {
    throw std::invalid_argument("HarmonicRamp: omega0, omega1, tau must be positive");
  }
}

double HarmonicRamp::omega_sq(double t) const noexcept {
  return omega0 * omega0 - (omega0 * omega0 - omega1 * omega1) * t / tau;
}

LengthProtocol::LengthProtocol(Variant v, double p0, double p1, double p2)
    : variant_(v), p0_(p0), p1_(p1), p2_(p2) {}

LengthProtocol LengthProtocol::linear(double lambda0, double v) {
  if (!(lambda0 > 0.0)) {
    throw std::invalid_argument("LengthProtocol: lambda0 must be positive");
  }
  return LengthProtocol(Variant::Linear, lambda0, v, 0.0);
}

LengthProtocol LengthProtocol::sqrt_form(double a, double b, double c) {
  if (!(c > 0.0)) {
    throw std::invalid_argument("LengthProtocol: c must be positive");
  }
  return LengthProtocol(Variant::SqrtForm, a, b, c);
}

double LengthProtocol::lambda(double t) const {
  double value;
  if (variant_ == Variant::Linear) {
    value = p0_ + p1_ * t;
  } else {
    const double q = p0_ * t * t + 2.0 * p1_ * t + p2_;
    if (!(q > 0.0)) throw std::domain_error("LengthProtocol: lambda_t^2 <= 0");
    value = std::sqrt(q);
  }
  if (!(value > 0.0)) throw std::domain_error("LengthProtocol: lambda_t <= 0");
  return value;
}

double LengthProtocol::lambda_dot(double t) const {
  if (variant_ == Variant::Linear) return p1_;
  return (p0_ * t + p1_) / lambda(t);
}

double LengthProtocol::lambda_ddot(double t) const {
  if (variant_ == Variant::Linear) return 0.0;
  const double l = lambda(t);
  return (p0_ * p2_ - p1_ * p1_) / (l * l * l);
}

double LengthProtocol::curvature() const noexcept {
  if (variant_ == Variant::Linear) return 0.0;
  return p0_ * p2_ - p1_ * p1_;
}

}  // namespace nlqsl
