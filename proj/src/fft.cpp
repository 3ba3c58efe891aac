#include "wmcorr/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>
#include <vector>

#include <fftw3.h>

#include "wmcorr/errors.hpp"

namespace wmcorr::fft {

namespace {

// FFTW planning is not thread-safe; execution of an existing plan on new
// arrays is.
class PlanCache {
 public:
  fftw_plan get(const Grid& grid, int axis, int sign, cplx* data) {
    const Key key{grid.points(), axis, sign};
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    fftw_plan plan = make(grid, axis, sign, reinterpret_cast<fftw_complex*>(data));
    if (plan == nullptr) throw Error("FFTError", "FFTW could not create a plan");
    plans_.emplace(key, plan);
    return plan;
  }

  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

 private:
  using Key = std::tuple<std::vector<std::size_t>, int, int>;

  static fftw_plan make(const Grid& grid, int axis, int sign, fftw_complex* data) {
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    const int d = grid.dims();
    if (axis < 0) {
      std::vector<int> n(d);
      for (int a = 0; a < d; ++a) n[a] = static_cast<int>(grid.points(a));
      return fftw_plan_dft(d, n.data(), data, data, sign, flags);
    }
    fftw_iodim dim{static_cast<int>(grid.points(axis)),
                   static_cast<int>(grid.stride(axis)),
                   static_cast<int>(grid.stride(axis))};
    std::vector<fftw_iodim> loops;
    for (int a = 0; a < d; ++a) {
      if (a == axis) continue;
      loops.push_back({static_cast<int>(grid.points(a)),
                       static_cast<int>(grid.stride(a)),
                       static_cast<int>(grid.stride(a))});
    }
    return fftw_plan_guru_dft(1, &dim, static_cast<int>(loops.size()),
                              loops.empty() ? nullptr : loops.data(), data, data,
                              sign, flags);
  }

  std::mutex mutex_;
  std::map<Key, fftw_plan> plans_;
};

PlanCache& plans() {
  static PlanCache cache;
  return cache;
}

// Multiplies by (-1)^(sum of indices along the transformed axes) * s.
void modulate(const Grid& grid, std::span<cplx> data, int axis, double s) {
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  const int d = grid.dims();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    std::size_t parity = 0;
    for (int a = 0; a < d; ++a) {
      if (axis >= 0 && a != axis) continue;
      parity += grid.index_along(static_cast<std::size_t>(i), a);
    }
    data[i] *= (parity & 1u) ? -s : s;
  }
}

void transform(const Grid& grid, std::span<cplx> data, std::optional<int> axis,
               int sign) {
  if (data.size() != grid.size()) {
    throw DimensionError("transform buffer does not match grid size");
  }
  const int ax = axis.value_or(-1);
  if (ax >= grid.dims()) throw DimensionError("transform axis out of range");
  double s = 1.0;
  for (int a = 0; a < grid.dims(); ++a) {
    if (ax >= 0 && a != ax) continue;
    const double step = sign == FFTW_FORWARD ? grid.dq(a) : grid.dp(a);
    s *= step / std::sqrt(2.0 * std::numbers::pi);
  }
  modulate(grid, data, ax, 1.0);
  fftw_plan plan = plans().get(grid, ax, sign, data.data());
  auto* raw = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, raw, raw);
  modulate(grid, data, ax, s);
}

}  // namespace

void to_momentum(const Grid& grid, std::span<cplx> data, std::optional<int> axis) {
  transform(grid, data, axis, FFTW_FORWARD);
}

void to_position(const Grid& grid, std::span<cplx> data, std::optional<int> axis) {
  transform(grid, data, axis, FFTW_BACKWARD);
}

}  // namespace wmcorr::fft
