#pragma once

#include <cstddef>
#include <vector>

namespace nlqsl {

/// Uniform spatial grid on [x_min, x_max) with periodic convention:
/// x_max is identified with x_min. The point count must be a power of
/// two (>= 16) so that spectral transforms are cheap and exact.
class SpatialGrid {
public:
  SpatialGrid(double x_min, double x_max, std::size_t n_points);

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  double length() const noexcept { return x_max_ - x_min_; }
  double dx() const noexcept { return dx_; }
  std::size_t size() const noexcept { return n_; }

  double x(std::size_t j) const noexcept {
    return x_min_ + dx_ * static_cast<double>(j);
  }
  std::vector<double> points() const;

  /// Angular wavenumber of FFT bin j with the layout k_j = 2*pi*s/L,
  /// s = j for j < N/2 and s = j - N otherwise (s in [-N/2, N/2)).
  double wavenumber(std::size_t j) const noexcept;

  bool operator==(const SpatialGrid& other) const noexcept;

private:
  double x_min_;
  double x_max_;
  double dx_;
  std::size_t n_;
};

}  // namespace nlqsl
