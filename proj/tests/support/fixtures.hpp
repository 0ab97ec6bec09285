// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "framelet/lattice.hpp"
#include "framelet/projector.hpp"

namespace framelet::testing {

inline Rational Q(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

/// +sqrt(q) written as a rational string.
inline RadCoeff root(const std::string& q) { return RadCoeff::sqrt_of(Q(q)); }

/// The exact rational q as a coefficient.
inline RadCoeff exact(const std::string& q) { return RadCoeff::from_rational(Q(q)); }

/// Three-direction matrix [[1,0,-1],[0,1,-1]].
inline IntMatrix example1_matrix() { return IntMatrix::from_rows({{1, 0, -1}, {0, 1, -1}}); }

/// Tensor-product linear B-spline matrix [[1,0,-1,0],[0,1,0,-1]].
inline IntMatrix example2_matrix() { return IntMatrix::from_rows({{1, 0, -1, 0}, {0, 1, 0, -1}}); }

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> entry(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  }
  return m;
}

/// Random valid direction matrix with d <= max_rows, d <= n <= max_cols.
inline IntMatrix random_valid_matrix(std::mt19937_64& rng, std::size_t max_rows, std::size_t max_cols) {
  std::uniform_int_distribution<std::size_t> rows_dist(1, max_rows);
  while (true) {
    const std::size_t d = rows_dist(rng);
    std::uniform_int_distribution<std::size_t> cols_dist(d, max_cols);
    IntMatrix m = random_matrix(rng, d, cols_dist(rng), -2, 2);
    if (validate_direction_matrix(m).valid()) return m;
  }
}

inline std::vector<double> random_xi(std::mt19937_64& rng, std::size_t d) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::vector<double> xi(d);
  for (auto& x : xi) x = u(rng);
  return xi;
}

}  // namespace framelet::testing
