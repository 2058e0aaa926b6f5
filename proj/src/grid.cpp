#include "grid.hpp"

#include <cmath>
#include <stdexcept>

namespace nlqsl {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

SpatialGrid::SpatialGrid(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_(n_points) {
  if (!(x_max > x_min)) {
    throw std::invalid_argument("SpatialGrid: x_max must exceed x_min");
  }
  if (n_points < 16 || !is_power_of_two(n_points)) {
    throw std::invalid_argument(
        "SpatialGrid: n_points must be a power of two and at least 16");
  }
  dx_ = (x_max - x_min) / static_cast<double>(n_points);
}

std::vector<double> SpatialGrid::points() const {
  std::vector<double> xs(n_);
  for (std::size_t j = 0; j < n_; ++j) xs[j] = x(j);
  return xs;
}

double SpatialGrid::wavenumber(std::size_t j) const noexcept {
  const double two_pi = 2.0 * M_PI;
  const auto half = n_ / 2;
  const double s = (j < half) ? static_cast<double>(j)
                              : static_cast<double>(j) - static_cast<double>(n_);
  return two_pi * s / length();
}

bool SpatialGrid::operator==(const SpatialGrid& other) const noexcept {
  return x_min_ == other.x_min_ && x_max_ == other.x_max_ && n_ == other.n_;
}

}  // namespace nlqsl
