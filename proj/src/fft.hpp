#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace nlqsl {

/// Thin RAII wrapper around FFTW double-precision 1-D transforms.
///
/// Conventions: forward() computes c_k = sum_j psi_j exp(-2*pi*i*j*k/N)
/// (unnormalized), backward() its inverse including the 1/N factor, so
/// backward(forward(x)) == x up to roundoff.
///
/// An Fft instance owns its plans and aligned scratch buffers and is not
/// thread-safe; create one instance per thread. Plan creation/destruction
/// is serialized internally (FFTW planner requirement), execution is not.
class Fft {
public:
  explicit Fft(std::size_t n);
  ~Fft();

  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  std::size_t size() const noexcept { return n_; }

  void forward(const std::complex<double>* in, std::complex<double>* out);
  void backward(const std::complex<double>* in, std::complex<double>* out);

  void forward(std::vector<std::complex<double>>& data);
  void backward(std::vector<std::complex<double>>& data);

private:
  std::size_t n_;
  void* plan_fwd_;
  void* plan_bwd_;
  std::complex<double>* buf_;
};

}  // namespace nlqsl
