#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace wmcorr {

inline constexpr int kMaxAxes = 3;
inline constexpr std::size_t kMinPointsPerAxis = 32;

/// Rectangular periodic grid with D in {1,2,3} axes, row-major storage
/// (last axis fastest). Axis j samples q = -L_j + k*dq_j, k = 0..N_j-1, and
/// its momentum dual samples p = (k - N_j/2)*dp_j with dq*dp*N = 2*pi.
class Grid {
 public:
  Grid(std::vector<std::size_t> points, std::vector<double> half_extent);

  /// Same point count and half-width on every axis.
  static Grid uniform(int dims, std::size_t points, double half_extent);

  int dims() const noexcept { return static_cast<int>(points_.size()); }
  std::size_t points(int axis) const { return points_[axis]; }
  const std::vector<std::size_t>& points() const noexcept { return points_; }
  double half_extent(int axis) const { return half_extent_[axis]; }
  const std::vector<double>& half_extents() const noexcept {
    return half_extent_;
  }
  std::size_t size() const noexcept { return size_; }

  double dq(int axis) const { return 2.0 * half_extent_[axis] / points_[axis]; }
  double dp(int axis) const;
  double cell_volume() const;           // prod dq
  double momentum_cell_volume() const;  // prod dp

  double q(int axis, std::size_t k) const {
    return -half_extent_[axis] + static_cast<double>(k) * dq(axis);
  }
  double p(int axis, std::size_t k) const;

  std::size_t stride(int axis) const { return strides_[axis]; }
  std::size_t index_along(std::size_t flat, int axis) const {
    return (flat / strides_[axis]) % points_[axis];
  }

  /// Position (or momentum) coordinates of every grid point along `axis`,
  /// laid out in flat storage order.
  std::vector<double> position_field(int axis) const;
  std::vector<double> momentum_field(int axis) const;

  bool operator==(const Grid& other) const noexcept {
    return points_ == other.points_ && half_extent_ == other.half_extent_;
  }

 private:
  std::vector<std::size_t> points_;
  std::vector<double> half_extent_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

}  // namespace wmcorr
