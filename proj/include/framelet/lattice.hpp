// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "framelet/error.hpp"

namespace framelet {

using Rational = mpq_class;

/// Exact square root of a nonnegative rational, if it is a rational square.
bool rational_sqrt(const Rational& q, Rational& root);

std::string to_string(const Rational& q);

/// A point of the integer lattice Z^d.
class IntVec {
 public:
  IntVec() = default;
  explicit IntVec(std::size_t dim) : entries_(dim, 0) {}
  IntVec(std::initializer_list<std::int64_t> entries) : entries_(entries) {}
  explicit IntVec(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}

  std::size_t dim() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  std::int64_t& operator[](std::size_t i) { return entries_[i]; }
  std::span<const std::int64_t> entries() const { return entries_; }

  bool is_zero() const;

  IntVec& operator+=(const IntVec& other);
  IntVec& operator-=(const IntVec& other);
  friend IntVec operator+(IntVec a, const IntVec& b) { return a += b; }
  friend IntVec operator-(IntVec a, const IntVec& b) { return a -= b; }
  friend IntVec operator*(std::int64_t s, IntVec v);
  friend IntVec operator-(IntVec v) { return -1 * std::move(v); }

  friend bool operator==(const IntVec&, const IntVec&) = default;
  friend auto operator<=>(const IntVec&, const IntVec&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

std::string to_string(const IntVec& v);

/// Componentwise residue mod 2, in {0,1}.
IntVec parity(const IntVec& v);

/// All vertices of the unit cube {0,1}^d in lexicographic order.
std::vector<IntVec> cube_vertices(std::size_t d);

/// The exact scalar sign * sqrt(radicand) with rational radicand >= 0.
class RadCoeff {
 public:
  RadCoeff() : sign_(0), radicand_(0) {}
  /// Throws std::invalid_argument if sign and radicand are inconsistent.
  RadCoeff(int sign, Rational radicand);

  /// The coefficient equal to q.
  static RadCoeff from_rational(const Rational& q);
  /// +sqrt(q) for q >= 0.
  static RadCoeff sqrt_of(const Rational& q);

  int sign() const { return sign_; }
  const Rational& radicand() const { return radicand_; }
  bool is_zero() const { return sign_ == 0; }

  /// The square of the value, always rational.
  const Rational& squared() const { return radicand_; }
  double to_double() const;
  /// The value as a rational, if it is one.
  bool to_rational(Rational& out) const;

  RadCoeff operator-() const { return RadCoeff(-sign_, radicand_); }
  friend RadCoeff operator*(const RadCoeff& x, const RadCoeff& y);

  friend bool operator==(const RadCoeff& x, const RadCoeff& y) {
    return x.sign_ == y.sign_ && x.radicand_ == y.radicand_;
  }

 private:
  int sign_;
  Rational radicand_;
};

std::string to_string(const RadCoeff& c);

/// sign(x)sign(y)sqrt(radicand(x)radicand(y)) as a rational; throws
/// NonSquareProduct when the radicand product is not a rational square.
Rational coeff_mul_rational(const RadCoeff& x, const RadCoeff& y);

/// Exact sum of two coefficients; throws IncommensurableTaps unless the ratio
/// of their radicands is a rational square.
RadCoeff coeff_add(const RadCoeff& x, const RadCoeff& y);

/// A finitely supported real filter on Z^d with exact coefficients.
class Filter {
 public:
  using TapMap = std::map<IntVec, RadCoeff>;

  explicit Filter(std::size_t dim);
  /// Zero coefficients are dropped. Throws DimensionMismatch on a wrong-length offset.
  Filter(std::size_t dim, TapMap taps);
  Filter(std::size_t dim, std::initializer_list<std::pair<const IntVec, RadCoeff>> taps);

  std::size_t dim() const { return dim_; }
  const TapMap& taps() const { return taps_; }
  std::size_t size() const { return taps_.size(); }
  bool empty() const { return taps_.empty(); }
  std::vector<IntVec> support() const;
  RadCoeff at(const IntVec& k) const;

  friend bool operator==(const Filter&, const Filter&) = default;

 private:
  std::size_t dim_;
  TapMap taps_;
};

/// Sums coefficients landing on the same offset exactly.
class FilterAccumulator {
 public:
  explicit FilterAccumulator(std::size_t dim) : dim_(dim) {}
  void add(const IntVec& k, const RadCoeff& c);
  Filter build() const { return Filter(dim_, taps_); }

 private:
  std::size_t dim_;
  Filter::TapMap taps_;
};

Filter dirac(std::size_t dim);
Filter dirac_at(const IntVec& gamma);
/// c * (delta_plus - delta_minus).
Filter two_tap(const IntVec& plus, const IntVec& minus, const RadCoeff& c);

Filter filter_shift(const Filter& f, const IntVec& k);
Filter filter_scale(const Filter& f, const RadCoeff& c);

std::complex<double> fourier_eval(const Filter& f, std::span<const double> xi);

/// Sum of all taps as an exact coefficient.
RadCoeff filter_sum(const Filter& f);

/// A low-pass filter together with its ordered high-pass filters.
class FilterBank {
 public:
  FilterBank(Filter lowpass, std::vector<Filter> highpass);

  std::size_t dim() const { return lowpass_.dim(); }
  const Filter& lowpass() const { return lowpass_; }
  const std::vector<Filter>& highpass() const { return highpass_; }

  friend bool operator==(const FilterBank&, const FilterBank&) = default;

 private:
  Filter lowpass_;
  std::vector<Filter> highpass_;
};

}  // namespace framelet
