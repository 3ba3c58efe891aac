#include "wmcorr/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wmcorr/errors.hpp"

namespace wmcorr {

Grid::Grid(std::vector<std::size_t> points, std::vector<double> half_extent)
    : points_(std::move(points)), half_extent_(std::move(half_extent)) {
  const int d = static_cast<int>(points_.size());
  if (d < 1 || d > kMaxAxes) {
    throw DimensionError("grid must have 1..3 axes, got " + std::to_string(d));
  }
  if (half_extent_.size() != points_.size()) {
    throw DimensionError("grid extent/points length mismatch");
  }
  for (int a = 0; a < d; ++a) {
    const std::size_t n = points_[a];
    if (n < kMinPointsPerAxis || (n & (n - 1)) != 0) {
      throw InvalidParams("points per axis must be a power of two >= 32, got " +
                          std::to_string(n));
    }
    if (!(half_extent_[a] > 0.0) || !std::isfinite(half_extent_[a])) {
      throw InvalidParams("grid half-extent must be positive and finite");
    }
  }
  strides_.assign(d, 1);
  for (int a = d - 2; a >= 0; --a) strides_[a] = strides_[a + 1] * points_[a + 1];
  size_ = strides_[0] * points_[0];
}

Grid Grid::uniform(int dims, std::size_t points, double half_extent) {
  if (dims < 1 || dims > kMaxAxes) {
    throw DimensionError("grid must have 1..3 axes");
  }
  return Grid(std::vector<std::size_t>(dims, points),
              std::vector<double>(dims, half_extent));
}

double Grid::dp(int axis) const {
  return 2.0 * std::numbers::pi / (static_cast<double>(points_[axis]) * dq(axis));
}

double Grid::p(int axis, std::size_t k) const {
  return (static_cast<double>(k) - static_cast<double>(points_[axis] / 2)) *
         dp(axis);
}

double Grid::cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < dims(); ++a) v *= dq(a);
  return v;
}

double Grid::momentum_cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < dims(); ++a) v *= dp(a);
  return v;
}

std::vector<double> Grid::position_field(int axis) const {
  std::vector<double> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = q(axis, index_along(i, axis));
  return out;
}

std::vector<double> Grid::momentum_field(int axis) const {
  std::vector<double> out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = p(axis, index_along(i, axis));
  return out;
}

}  // namespace wmcorr
