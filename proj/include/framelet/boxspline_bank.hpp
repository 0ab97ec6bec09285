// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#pragma once

#include <string>
#include <vector>

#include "framelet/lattice.hpp"
#include "framelet/projector.hpp"

namespace framelet {

enum class BankMode {
  /// Project every n-dimensional Haar high-pass filter, dropping zeros.
  Projected,
  /// One filter 2^-n sqrt(m1 m2) (delta_g1 - delta_g2) per pair of mask support points.
  Combined,
};

enum class ReduceMode {
  /// Merge shift-equivalent pairs of equal weight w, w into sqrt(2) w.
  EqualWeightPairs,
  /// Merge each whole even-shift class c_1 b, ..., c_r b into sqrt(sum c_i^2) b.
  FullClass,
};

FilterBank build_boxspline_bank(const DirectionMatrix& p, BankMode mode);

/// Merges high-pass filters that agree up to a translation by an even vector.
/// Merged filters are anchored at the lexicographically smallest representative
/// and keep the position of the first class member. Throws NotTwoTap.
FilterBank reduce_bank(const FilterBank& bank, ReduceMode mode);

/// One row of the figure edge list.
struct Edge {
  IntVec plus;
  IntVec minus;
  Rational weight_squared;
  IntVec direction;
  double slope_degrees;  // d = 2 only, otherwise 0
};

std::vector<Edge> edge_list(const FilterBank& bank);

/// CSV with columns gamma1, gamma2, weight_num, weight_den, direction, slope_degrees.
std::string edges_to_csv(const std::vector<Edge>& edges);

BankMode parse_bank_mode(const std::string& s);

}  // namespace framelet
