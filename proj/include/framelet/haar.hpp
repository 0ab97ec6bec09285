// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "framelet/lattice.hpp"

namespace framelet {

inline constexpr std::size_t kDefaultMaxHaarDim = 6;

/// The d-dimensional Haar low-pass filter: 2^-d on {0,1}^d.
Filter haar_lowpass(std::size_t d);

/// Haar low-pass filter plus one high-pass 2^-d (delta_g1 - delta_g2) per
/// unordered pair of distinct cube vertices. Pairs are enumerated in
/// lexicographic order (g1 < g2) and the positive tap sits on g1.
FilterBank build_haar_bank(std::size_t d, std::size_t max_dim = kDefaultMaxHaarDim);

/// Canonical direction: divided by the gcd of its entries, first nonzero entry positive.
class DirectionVector {
 public:
  /// Throws std::invalid_argument on the zero vector.
  explicit DirectionVector(const IntVec& v);

  const IntVec& vector() const { return v_; }
  /// Angle from the first axis in degrees, in (-90, 90]. Only meaningful for d = 2.
  double slope_degrees() const;

  friend bool operator==(const DirectionVector&, const DirectionVector&) = default;
  friend auto operator<=>(const DirectionVector&, const DirectionVector&) = default;

 private:
  IntVec v_;
};

/// Taps of a signed two-tap filter; plus carries the positive coefficient.
struct TwoTapView {
  IntVec plus;
  IntVec minus;
  RadCoeff weight;  // magnitude of the positive tap
};

/// Throws NotTwoTap unless f has exactly two taps of opposite sign.
/// With equal_magnitude, the two taps must also be negatives of each other.
TwoTapView as_two_tap(const Filter& f, bool equal_magnitude = true);

struct DirectionCensus {
  std::map<DirectionVector, std::size_t> counts;
  std::size_t distinct() const { return counts.size(); }
};

/// Counts the directions of the high-pass filters of a bank. Each filter must
/// be a signed two-tap filter (NotTwoTap otherwise).
DirectionCensus direction_census(const FilterBank& bank);

}  // namespace framelet
