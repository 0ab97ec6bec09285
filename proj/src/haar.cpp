// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#include "framelet/haar.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

namespace framelet {

namespace {

Rational inverse_power_of_four(std::size_t d) {
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>(2 * d);
  return Rational(1, den);
}

}  // namespace

Filter haar_lowpass(std::size_t d) {
  const RadCoeff value = RadCoeff::sqrt_of(inverse_power_of_four(d));
  Filter::TapMap taps;
  for (auto& v : cube_vertices(d)) taps.emplace(std::move(v), value);
  return Filter(d, std::move(taps));
}

FilterBank build_haar_bank(std::size_t d, std::size_t max_dim) {
  if (d == 0) throw DimensionMismatch("Haar bank dimension must be positive");
  if (d > max_dim) throw DimensionTooLarge(fmt::format("Haar bank dimension {} exceeds the cap {}", d, max_dim));

  const RadCoeff weight = RadCoeff::sqrt_of(inverse_power_of_four(d));
  const auto vertices = cube_vertices(d);
  std::vector<Filter> highpass;
  highpass.reserve(vertices.size() * (vertices.size() - 1) / 2);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      highpass.push_back(two_tap(vertices[i], vertices[j], weight));
    }
  }
  return FilterBank(haar_lowpass(d), std::move(highpass));
}

DirectionVector::DirectionVector(const IntVec& v) : v_(v) {
  if (v.is_zero()) throw std::invalid_argument("direction of the zero vector");
  std::int64_t g = 0;
  for (auto e : v.entries()) g = std::gcd(g, e);
  std::int64_t first = 0;
  for (auto e : v.entries()) {
    if (e != 0) {
      first = e;
      break;
    }
  }
  if (first < 0) g = -g;
  for (std::size_t i = 0; i < v_.dim(); ++i) v_[i] /= g;
}

double DirectionVector::slope_degrees() const {
  if (v_.dim() != 2) return 0.0;
  return std::atan2(static_cast<double>(v_[1]), static_cast<double>(v_[0])) * 180.0 / std::numbers::pi;
}

TwoTapView as_two_tap(const Filter& f, bool equal_magnitude) {
  if (f.size() != 2) throw NotTwoTap(fmt::format("filter has {} taps, expected 2", f.size()));
  auto it = f.taps().begin();
  const auto& [k1, c1] = *it++;
  const auto& [k2, c2] = *it;
  if (c1.sign() == c2.sign()) throw NotTwoTap("two-tap filter taps have the same sign");
  if (equal_magnitude && c1.radicand() != c2.radicand()) {
    throw NotTwoTap("two-tap filter taps differ in magnitude");
  }
  if (c1.sign() > 0) return {k1, k2, c1};
  return {k2, k1, c2};
}

DirectionCensus direction_census(const FilterBank& bank) {
  DirectionCensus census;
  for (const auto& h : bank.highpass()) {
    const auto view = as_two_tap(h, false);
    ++census.counts[DirectionVector(view.plus - view.minus)];
  }
  return census;
}

}  // namespace framelet
