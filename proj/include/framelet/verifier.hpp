// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "framelet/lattice.hpp"

namespace framelet {

/// (gamma, n) with gamma in {0,1}^d and n in Z^d.
using GramKey = std::pair<IntVec, IntVec>;

/// Nonzero values of sum_l sum_k f_l(gamma + 2k) f_l(n + gamma + 2k) over the
/// given filters. Absent keys are zero.
std::map<GramKey, Rational> gram_sums(std::span<const Filter> filters);

struct GramDefect {
  IntVec gamma;
  IntVec n;
  Rational actual;
  Rational expected;
  Rational defect() const { return actual - expected; }
};

struct VerificationReport {
  bool pass = true;
  /// First failing cell in lexicographic (gamma, n) order.
  std::optional<GramDefect> first_failure;
  /// Every checked cell, filled only when requested.
  std::vector<GramDefect> cells;
  std::size_t cells_checked = 0;
};

struct VerifyOptions {
  bool collect_cells = false;
  /// Widens the n range to the bounding box of the difference set grown by
  /// this many lattice steps per axis. Zero checks the difference set itself.
  std::size_t widen = 0;
};

/// Exact check of the spatial tight framelet identities for every gamma in
/// {0,1}^d and every n in the difference set of the union of filter supports
/// (plus 0). Throws IncommensurableTaps when a product is not rational.
VerificationReport verify_tight_bank(const FilterBank& bank, const VerifyOptions& options = {});

/// Max over a uniform grid of [0, 2pi)^d and omega in {0,1}^d of
/// |a(xi) conj(a(xi + pi omega)) + sum_l b_l(xi) conj(b_l(xi + pi omega)) - delta(omega)|.
double verify_frequency(const FilterBank& bank, std::size_t grid_points_per_axis);

}  // namespace framelet
