#pragma once

// Unitary position <-> momentum transforms on a Grid with the hbar = 1
// kernel exp(-i p q) / sqrt(2 pi) per transformed axis. Backed by FFTW;
// the (-1)^k modulation maps the centered grids onto FFTW's index range.

#include <complex>
#include <optional>
#include <span>

#include "wmcorr/grid.hpp"

namespace wmcorr::fft {

using cplx = std::complex<double>;

/// In place, position -> momentum. With `axis` set only that axis is
/// transformed; otherwise all axes are.
void to_momentum(const Grid& grid, std::span<cplx> data,
                 std::optional<int> axis = std::nullopt);

/// In place, momentum -> position. Inverse of to_momentum.
void to_position(const Grid& grid, std::span<cplx> data,
                 std::optional<int> axis = std::nullopt);

}  // namespace wmcorr::fft
