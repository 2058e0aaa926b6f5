#include "fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>
#include <stdexcept>

namespace nlqsl {

namespace {
// FFTW's planner is not thread-safe; executing existing plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft::Fft(std::size_t n) : n_(n), plan_fwd_(nullptr), plan_bwd_(nullptr) {
  if (n == 0) throw std::invalid_argument("Fft: zero-length transform");
  std::lock_guard<std::mutex> lock(planner_mutex());
  buf_ = reinterpret_cast<std::complex<double>*>(
      fftw_malloc(sizeof(fftw_complex) * n));
  if (!buf_) throw std::bad_alloc();
  auto* raw = reinterpret_cast<fftw_complex*>(buf_);
  // FFTW_ESTIMATE keeps planning deterministic and leaves the buffer intact.
  plan_fwd_ = fftw_plan_dft_1d(static_cast<int>(n), raw, raw, FFTW_FORWARD,
                               FFTW_ESTIMATE);
  plan_bwd_ = fftw_plan_dft_1d(static_cast<int>(n), raw, raw, FFTW_BACKWARD,
                               FFTW_ESTIMATE);
  if (!plan_fwd_ || !plan_bwd_) {
    fftw_free(buf_);
    throw std::runtime_error("Fft: plan creation failed");
  }
}

Fft::~Fft() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
  fftw_free(buf_);
}

void Fft::forward(const std::complex<double>* in, std::complex<double>* out) {
  std::memcpy(buf_, in, n_ * sizeof(std::complex<double>));
  fftw_execute(static_cast<fftw_plan>(plan_fwd_));
  std::memcpy(out, buf_, n_ * sizeof(std::complex<double>));
}

void Fft::backward(const std::complex<double>* in, std::complex<double>* out) {
  std::memcpy(buf_, in, n_ * sizeof(std::complex<double>));
  fftw_execute(static_cast<fftw_plan>(plan_bwd_));
  const double inv_n = 1.0 / static_cast<double>(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = buf_[j] * inv_n;
}

void Fft::forward(std::vector<std::complex<double>>& data) {
  forward(data.data(), data.data());
}

void Fft::backward(std::vector<std::complex<double>>& data) {
  backward(data.data(), data.data());
}

}  // namespace nlqsl
