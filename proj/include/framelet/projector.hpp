// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "framelet/lattice.hpp"

namespace framelet {

inline constexpr std::size_t kDefaultMaxFiberCols = 20;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  /// Throws ParseError on ragged or empty input.
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  IntVec column(std::size_t c) const;
  IntVec apply(const IntVec& k) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> entries_;
};

IntMatrix identity_matrix(std::size_t d);

/// Rank over the rationals.
std::size_t rational_rank(const IntMatrix& m);

enum class MatrixStatus { Valid, InvalidRank, FailsOddCondition };

struct MatrixValidation {
  MatrixStatus status;
  std::size_t rank;
  /// For FailsOddCondition: a nonzero omega in {0,1}^d with P^T omega in 2Z^n.
  std::optional<IntVec> witness;

  bool valid() const { return status == MatrixStatus::Valid; }
};

/// Rank d over Q, and P^T omega odd for every nonzero omega in {0,1}^d,
/// decided by independence of the rows of P mod 2.
MatrixValidation validate_direction_matrix(const IntMatrix& p);

/// An integer d x n matrix that passed validate_direction_matrix.
class DirectionMatrix {
 public:
  /// Throws InvalidDirectionMatrix on failure.
  explicit DirectionMatrix(IntMatrix p);

  std::size_t rows() const { return p_.rows(); }
  std::size_t cols() const { return p_.cols(); }
  const IntMatrix& matrix() const { return p_; }

 private:
  IntMatrix p_;
};

/// [Pf](j) = sum over Pk = j of f(k). Throws IncommensurableTaps when
/// colliding taps cannot be added exactly.
Filter project_filter(const IntMatrix& p, const Filter& f);

/// {k in {0,1}^n : Pk = gamma} in lexicographic order.
std::vector<IntVec> preimage_vertices(const IntMatrix& p, const IntVec& gamma,
                                      std::size_t max_cols = kDefaultMaxFiberCols);

/// The box-spline refinement mask: projection of the n-dimensional Haar low-pass filter.
Filter boxspline_mask(const DirectionMatrix& p);

/// sum_k f(gamma + 2k) == 2^-d for every gamma in {0,1}^d, exactly.
bool sum_rules_order_one(const Filter& f);

}  // namespace framelet
