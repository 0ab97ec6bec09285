// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#include "framelet/projector.hpp"

#include <map>
#include <utility>

#include <fmt/format.h>

#include "framelet/haar.hpp"

namespace framelet {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, 0) {
  if (rows == 0 || cols == 0) throw ParseError("matrix must be nonempty");
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty() || rows.front().empty()) throw ParseError("matrix must be nonempty");
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      throw ParseError(fmt::format("ragged matrix: row {} has {} entries, expected {}", r + 1, rows[r].size(), m.cols_));
    }
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVec IntMatrix::column(std::size_t c) const {
  IntVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntVec IntMatrix::apply(const IntVec& k) const {
  if (k.dim() != cols_) {
    throw DimensionMismatch(fmt::format("vector of dimension {} for a {}x{} matrix", k.dim(), rows_, cols_));
  }
  IntVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::int64_t s = 0;
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * k[c];
    out[r] = s;
  }
  return out;
}

IntMatrix identity_matrix(std::size_t d) {
  IntMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1;
  return m;
}

std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && sgn(a[pivot][c]) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (sgn(a[r][c]) == 0) continue;
      const Rational factor = a[r][c] / a[rank][c];
      for (std::size_t cc = c; cc < m.cols(); ++cc) a[r][cc] -= factor * a[rank][cc];
    }
    ++rank;
  }
  return rank;
}

namespace {

/// Finds a nonzero GF(2) combination of rows summing to zero, as a row mask.
std::optional<std::vector<bool>> gf2_dependency(const IntMatrix& p) {
  const std::size_t d = p.rows();
  const std::size_t n = p.cols();
  // Each working row carries its mod-2 entries and the set of original rows it combines.
  std::vector<std::vector<bool>> bits(d, std::vector<bool>(n));
  std::vector<std::vector<bool>> combo(d, std::vector<bool>(d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < n; ++c) bits[r][c] = (p(r, c) % 2) != 0;
    combo[r][r] = true;
  }
  std::vector<bool> used(d, false);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = d;
    for (std::size_t r = 0; r < d; ++r) {
      if (!used[r] && bits[r][c]) {
        pivot = r;
        break;
      }
    }
    if (pivot == d) continue;
    used[pivot] = true;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == pivot || !bits[r][c]) continue;
      for (std::size_t cc = 0; cc < n; ++cc) bits[r][cc] = bits[r][cc] != bits[pivot][cc];
      for (std::size_t rr = 0; rr < d; ++rr) combo[r][rr] = combo[r][rr] != combo[pivot][rr];
    }
  }
  for (std::size_t r = 0; r < d; ++r) {
    if (!used[r]) return combo[r];
  }
  return std::nullopt;
}

}  // namespace

MatrixValidation validate_direction_matrix(const IntMatrix& p) {
  const std::size_t rank = rational_rank(p);
  if (rank != p.rows() || p.rows() > p.cols()) return {MatrixStatus::InvalidRank, rank, std::nullopt};
  if (auto dep = gf2_dependency(p)) {
    IntVec omega(p.rows());
    for (std::size_t r = 0; r < p.rows(); ++r) omega[r] = (*dep)[r] ? 1 : 0;
    return {MatrixStatus::FailsOddCondition, rank, omega};
  }
  return {MatrixStatus::Valid, rank, std::nullopt};
}

DirectionMatrix::DirectionMatrix(IntMatrix p) : p_(std::move(p)) {
  const auto check = validate_direction_matrix(p_);
  switch (check.status) {
    case MatrixStatus::Valid:
      return;
    case MatrixStatus::InvalidRank:
      throw InvalidDirectionMatrix(
          fmt::format("direction matrix has rank {} but {} rows", check.rank, p_.rows()));
    case MatrixStatus::FailsOddCondition:
      throw InvalidDirectionMatrix(fmt::format("direction matrix maps the nonzero vector {} to an even vector",
                                               to_string(*check.witness)));
  }
}

Filter project_filter(const IntMatrix& p, const Filter& f) {
  if (f.dim() != p.cols()) {
    throw DimensionMismatch(
        fmt::format("projecting a {}-dimensional filter with a {}x{} matrix", f.dim(), p.rows(), p.cols()));
  }
  FilterAccumulator acc(p.rows());
  for (const auto& [k, c] : f.taps()) acc.add(p.apply(k), c);
  return acc.build();
}

std::vector<IntVec> preimage_vertices(const IntMatrix& p, const IntVec& gamma, std::size_t max_cols) {
  if (gamma.dim() != p.rows()) {
    throw DimensionMismatch(fmt::format("point of dimension {} for a {}-row matrix", gamma.dim(), p.rows()));
  }
  if (p.cols() > max_cols) {
    throw DimensionTooLarge(fmt::format("fiber enumeration over 2^{} vertices exceeds the cap 2^{}", p.cols(), max_cols));
  }
  std::vector<IntVec> out;
  for (auto& v : cube_vertices(p.cols())) {
    if (p.apply(v) == gamma) out.push_back(std::move(v));
  }
  return out;
}

Filter boxspline_mask(const DirectionMatrix& p) { return project_filter(p.matrix(), haar_lowpass(p.cols())); }

bool sum_rules_order_one(const Filter& f) {
  const std::size_t d = f.dim();
  std::map<IntVec, RadCoeff> coset_sums;
  for (const auto& [k, c] : f.taps()) {
    auto [it, inserted] = coset_sums.try_emplace(parity(k), c);
    if (!inserted) it->second = coeff_add(it->second, c);
  }
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>(2 * d);
  const RadCoeff target = RadCoeff::sqrt_of(Rational(1, den));
  for (const auto& gamma : cube_vertices(d)) {
    auto it = coset_sums.find(gamma);
    if (it == coset_sums.end() || !(it->second == target)) return false;
  }
  return true;
}

}  // namespace framelet
