// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "framelet/lattice.hpp"

namespace framelet {

/// A real array on the torus Z_{N_1} x ... x Z_{N_d}, row-major.
template <typename T>
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::size_t> dims) : dims_(std::move(dims)), values_(count(dims_), T(0)) {}
  Tensor(std::vector<std::size_t> dims, std::vector<T> values) : dims_(std::move(dims)), values_(std::move(values)) {
    if (values_.size() != count(dims_)) {
      throw ShapeMismatch(fmt::format("{} values for a tensor of {} entries", values_.size(), count(dims_)));
    }
  }

  std::size_t rank() const { return dims_.size(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<T>& values() const { return values_; }
  std::vector<T>& values() { return values_; }
  T& operator[](std::size_t i) { return values_[i]; }
  const T& operator[](std::size_t i) const { return values_[i]; }

  /// Row-major index of a lattice point, wrapped onto the torus.
  std::size_t wrap_index(const IntVec& k) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      const auto n = static_cast<std::int64_t>(dims_[i]);
      idx = idx * dims_[i] + static_cast<std::size_t>(((k[i] % n) + n) % n);
    }
    return idx;
  }

  IntVec point(std::size_t idx) const {
    IntVec k(dims_.size());
    for (std::size_t i = dims_.size(); i-- > 0;) {
      k[i] = static_cast<std::int64_t>(idx % dims_[i]);
      idx /= dims_[i];
    }
    return k;
  }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  static std::size_t count(const std::vector<std::size_t>& dims) {
    return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  }

  std::vector<std::size_t> dims_;
  std::vector<T> values_;
};

/// Detail tensors of one decomposition level, one per high-pass filter.
template <typename T>
struct PyramidLevel {
  std::vector<Tensor<T>> details;
};

/// levels[j] holds the details at scale j + 1; lowpass is the coarsest approximation.
template <typename T>
struct CoefficientPyramid {
  std::vector<std::size_t> input_dims;
  std::vector<PyramidLevel<T>> levels;
  Tensor<T> lowpass;
};

namespace detail {

template <typename T>
struct ScaledTap {
  IntVec offset;
  T value;  // 2^{d/2} h(offset)
};

template <typename T>
std::vector<ScaledTap<T>> scaled_taps(const Filter& h);

template <>
inline std::vector<ScaledTap<double>> scaled_taps<double>(const Filter& h) {
  const double scale = std::pow(2.0, static_cast<double>(h.dim()) / 2.0);
  std::vector<ScaledTap<double>> out;
  for (const auto& [k, c] : h.taps()) out.push_back({k, scale * c.to_double()});
  return out;
}

template <>
inline std::vector<ScaledTap<Rational>> scaled_taps<Rational>(const Filter& h) {
  // 2^{d/2} h(k) = sign * sqrt(2^d * radicand) must be rational.
  mpz_class scale = 1;
  scale <<= static_cast<mp_bitcnt_t>(h.dim());
  std::vector<ScaledTap<Rational>> out;
  for (const auto& [k, c] : h.taps()) {
    Rational value;
    if (!RadCoeff(c.sign(), c.radicand() * scale).to_rational(value)) {
      throw InexactCoefficient(fmt::format("tap {} of value {} has an irrational scaled coefficient", to_string(k),
                                           to_string(c)));
    }
    out.push_back({k, std::move(value)});
  }
  return out;
}

inline void check_analysis_dims(const std::vector<std::size_t>& dims, std::size_t bank_dim, std::size_t levels) {
  if (dims.size() != bank_dim) {
    throw DimensionMismatch(fmt::format("{}-dimensional data for a {}-dimensional bank", dims.size(), bank_dim));
  }
  if (levels == 0) throw BadDims("at least one decomposition level is required");
  if (levels >= 30) throw BadDims(fmt::format("{} levels is too many", levels));
  const std::size_t block = std::size_t{1} << levels;
  for (auto n : dims) {
    if (n % block != 0 || n / block < 2) {
      throw BadDims(fmt::format("axis of length {} does not support {} levels (needs a multiple of {} and at least {})",
                                n, levels, block, 2 * block));
    }
  }
}

/// (T_h u)(n) = sum over taps of scaled h(t) u(2n + t), periodized.
template <typename T>
Tensor<T> analyze_one(const std::vector<ScaledTap<T>>& taps, const Tensor<T>& u) {
  std::vector<std::size_t> half(u.dims());
  for (auto& n : half) n /= 2;
  Tensor<T> out(std::move(half));
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    const IntVec base = 2 * out.point(idx);
    T acc(0);
    for (const auto& tap : taps) acc += tap.value * u[u.wrap_index(base + tap.offset)];
    out[idx] = acc;
  }
  return out;
}

/// u(2n + t) += scaled h(t) v(n), periodized.
template <typename T>
void synthesize_one(const std::vector<ScaledTap<T>>& taps, const Tensor<T>& v, Tensor<T>& u) {
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    const IntVec base = 2 * v.point(idx);
    for (const auto& tap : taps) u[u.wrap_index(base + tap.offset)] += tap.value * v[idx];
  }
}

}  // namespace detail

/// Multi-level framelet decomposition on the torus with normalization 2^{d/2}.
/// Every axis must be divisible by 2^levels with at least 2 samples left.
template <typename T>
CoefficientPyramid<T> analyze(const FilterBank& bank, const Tensor<T>& u, std::size_t levels) {
  detail::check_analysis_dims(u.dims(), bank.dim(), levels);
  const auto low = detail::scaled_taps<T>(bank.lowpass());
  std::vector<std::vector<detail::ScaledTap<T>>> high;
  for (const auto& h : bank.highpass()) high.push_back(detail::scaled_taps<T>(h));

  CoefficientPyramid<T> p;
  p.input_dims = u.dims();
  Tensor<T> current = u;
  for (std::size_t j = 0; j < levels; ++j) {
    PyramidLevel<T> level;
    level.details.reserve(high.size());
    for (const auto& taps : high) level.details.push_back(detail::analyze_one(taps, current));
    current = detail::analyze_one(low, current);
    p.levels.push_back(std::move(level));
  }
  p.lowpass = std::move(current);
  return p;
}

/// Adjoint of analyze; the inverse when the bank is a tight framelet filter bank.
template <typename T>
Tensor<T> synthesize(const FilterBank& bank, const CoefficientPyramid<T>& p) {
  const std::size_t s = bank.highpass().size();
  if (p.levels.empty()) throw ShapeMismatch("pyramid has no levels");
  if (p.input_dims.size() != bank.dim()) {
    throw ShapeMismatch(fmt::format("pyramid of rank {} for a {}-dimensional bank", p.input_dims.size(), bank.dim()));
  }
  detail::check_analysis_dims(p.input_dims, bank.dim(), p.levels.size());

  auto expected_dims = [&](std::size_t level) {
    std::vector<std::size_t> dims(p.input_dims);
    for (auto& n : dims) n >>= level;
    return dims;
  };
  if (p.lowpass.dims() != expected_dims(p.levels.size())) throw ShapeMismatch("low-pass tensor has the wrong shape");
  for (std::size_t j = 0; j < p.levels.size(); ++j) {
    if (p.levels[j].details.size() != s) {
      throw ShapeMismatch(fmt::format("level {} has {} detail tensors, the bank has {} high-pass filters", j + 1,
                                      p.levels[j].details.size(), s));
    }
    for (const auto& t : p.levels[j].details) {
      if (t.dims() != expected_dims(j + 1)) {
        throw ShapeMismatch(fmt::format("detail tensor at level {} has the wrong shape", j + 1));
      }
    }
  }

  const auto low = detail::scaled_taps<T>(bank.lowpass());
  std::vector<std::vector<detail::ScaledTap<T>>> high;
  for (const auto& h : bank.highpass()) high.push_back(detail::scaled_taps<T>(h));

  Tensor<T> current = p.lowpass;
  for (std::size_t j = p.levels.size(); j-- > 0;) {
    Tensor<T> finer(expected_dims(j));
    detail::synthesize_one(low, current, finer);
    for (std::size_t l = 0; l < s; ++l) detail::synthesize_one(high[l], p.levels[j].details[l], finer);
    current = std::move(finer);
  }
  return current;
}

template <typename T>
T tensor_energy(const Tensor<T>& t) {
  T sum(0);
  for (const auto& v : t.values()) sum += v * v;
  return sum;
}

/// Sum of squares of every coefficient, final low-pass included.
template <typename T>
T pyramid_energy(const CoefficientPyramid<T>& p) {
  T sum = tensor_energy(p.lowpass);
  for (const auto& level : p.levels) {
    for (const auto& t : level.details) sum += tensor_energy(t);
  }
  return sum;
}

/// Max-abs reconstruction error relative to max|u| and relative energy
/// mismatch for one analyze/synthesize round trip.
struct RoundTripDefects {
  double reconstruction = 0.0;
  double parseval = 0.0;
};

RoundTripDefects roundtrip_defects(const FilterBank& bank, const Tensor<double>& u, std::size_t levels);

}  // namespace framelet
