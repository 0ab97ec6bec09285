// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "framelet/lattice.hpp"
#include "framelet/projector.hpp"

namespace framelet {

inline constexpr std::size_t kMaxCascadeLevel = 12;

/// Samples of a function at the points 2^-level * k for k in the box
/// [lower, lower + extent), row-major. Points outside the box read as 0.
struct DyadicGrid {
  std::size_t level = 0;
  IntVec lower;
  std::vector<std::size_t> extent;
  std::vector<double> values;
  /// Support of the sampled function, [support_lower, support_upper] per axis, in units of 1.
  IntVec support_lower;
  IntVec support_upper;

  std::size_t dim() const { return lower.dim(); }
  double at(const IntVec& k) const;
  IntVec point(std::size_t idx) const;
};

/// Subdivision from a Dirac seed: v_{j+1}(k) = 2^d sum_m a(k - 2m) v_j(m).
/// v_level(k) approximates phi(2^-level k). Requires the taps of a to sum to 1.
DyadicGrid cascade_phi(const Filter& a, std::size_t level);

/// psi_l(x) = 2^d sum_k b_l(k) phi(2x - k) on the 2^-level grid, for every
/// high-pass filter. phi must be cascade_phi(bank.lowpass(), level + 1).
std::vector<DyadicGrid> sample_psi(const FilterBank& bank, const DyadicGrid& phi, std::size_t level);

/// Fourier transform of the box spline: product over columns k of
/// (1 - exp(-i k.xi)) / (i k.xi), each factor 1 at k.xi = 0.
std::complex<double> boxspline_fourier_eval(const IntMatrix& p, std::span<const double> xi);

/// CSV with columns x1..xd,value at resolution 2^-level.
std::string grid_to_csv(const DyadicGrid& grid);

}  // namespace framelet
