// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#include "framelet/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

namespace framelet {

namespace {

std::size_t box_size(const std::vector<std::size_t>& extent) {
  std::size_t n = 1;
  for (auto e : extent) n *= e;
  return n;
}

/// Index of k in the grid box, or npos when outside.
std::size_t box_index(const DyadicGrid& g, const IntVec& k) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const std::int64_t off = k[i] - g.lower[i];
    if (off < 0 || off >= static_cast<std::int64_t>(g.extent[i])) return static_cast<std::size_t>(-1);
    idx = idx * g.extent[i] + static_cast<std::size_t>(off);
  }
  return idx;
}

DyadicGrid make_grid(std::size_t level, const IntVec& lower, const IntVec& upper) {
  DyadicGrid g;
  g.level = level;
  g.lower = lower;
  for (std::size_t i = 0; i < lower.dim(); ++i) g.extent.push_back(static_cast<std::size_t>(upper[i] - lower[i] + 1));
  g.values.assign(box_size(g.extent), 0.0);
  return g;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

double DyadicGrid::at(const IntVec& k) const {
  const std::size_t idx = box_index(*this, k);
  return idx == static_cast<std::size_t>(-1) ? 0.0 : values[idx];
}

IntVec DyadicGrid::point(std::size_t idx) const {
  IntVec k(dim());
  for (std::size_t i = dim(); i-- > 0;) {
    k[i] = lower[i] + static_cast<std::int64_t>(idx % extent[i]);
    idx /= extent[i];
  }
  return k;
}

DyadicGrid cascade_phi(const Filter& a, std::size_t level) {
  if (level > kMaxCascadeLevel) {
    throw DimensionTooLarge(fmt::format("cascade level {} exceeds the cap {}", level, kMaxCascadeLevel));
  }
  if (a.empty()) throw MaskNotNormalized("mask has no taps");
  double total = 0.0;
  for (const auto& [k, c] : a.taps()) total += c.to_double();
  if (std::abs(total - 1.0) > 1e-12) throw MaskNotNormalized(fmt::format("mask taps sum to {}, expected 1", total));

  const std::size_t d = a.dim();
  IntVec tap_lo = a.taps().begin()->first;
  IntVec tap_hi = tap_lo;
  for (const auto& [k, c] : a.taps()) {
    for (std::size_t i = 0; i < d; ++i) {
      tap_lo[i] = std::min(tap_lo[i], k[i]);
      tap_hi[i] = std::max(tap_hi[i], k[i]);
    }
  }
  std::vector<std::pair<IntVec, double>> taps;
  const double gain = std::ldexp(1.0, static_cast<int>(d));
  for (const auto& [k, c] : a.taps()) taps.emplace_back(k, gain * c.to_double());

  DyadicGrid v = make_grid(0, IntVec(d), IntVec(d));
  v.values[0] = 1.0;
  for (std::size_t j = 0; j < level; ++j) {
    IntVec lo = 2 * v.lower + tap_lo;
    IntVec hi = 2 * v.lower + tap_hi;
    for (std::size_t i = 0; i < d; ++i) hi[i] += 2 * (static_cast<std::int64_t>(v.extent[i]) - 1);
    DyadicGrid next = make_grid(j + 1, lo, hi);
    for (std::size_t idx = 0; idx < v.values.size(); ++idx) {
      const double value = v.values[idx];
      if (value == 0.0) continue;
      const IntVec base = 2 * v.point(idx);
      for (const auto& [t, c] : taps) next.values[box_index(next, base + t)] += c * value;
    }
    v = std::move(next);
  }

  // Pad to the full support box of the limit function so that grid points on
  // its boundary are present.
  const auto scale = std::int64_t{1} << level;
  IntVec lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = std::min(scale * tap_lo[i], v.lower[i]);
    hi[i] = std::max(scale * tap_hi[i], v.lower[i] + static_cast<std::int64_t>(v.extent[i]) - 1);
  }
  DyadicGrid out = make_grid(level, lo, hi);
  for (std::size_t idx = 0; idx < v.values.size(); ++idx) out.values[box_index(out, v.point(idx))] = v.values[idx];
  out.support_lower = tap_lo;
  out.support_upper = tap_hi;
  return out;
}

std::vector<DyadicGrid> sample_psi(const FilterBank& bank, const DyadicGrid& phi, std::size_t level) {
  const std::size_t d = bank.dim();
  if (phi.dim() != d) throw GridMismatch(fmt::format("{}-dimensional samples for a {}-dimensional bank", phi.dim(), d));
  if (phi.level != level + 1) {
    throw GridMismatch(fmt::format("framelets at level {} need refinable samples at level {}, got {}", level,
                                   level + 1, phi.level));
  }
  const double gain = std::ldexp(1.0, static_cast<int>(d));
  const auto fine = std::int64_t{1} << (level + 1);

  std::vector<DyadicGrid> out;
  for (const auto& b : bank.highpass()) {
    IntVec t_lo = b.taps().begin()->first;
    IntVec t_hi = t_lo;
    for (const auto& [t, c] : b.taps()) {
      for (std::size_t i = 0; i < d; ++i) {
        t_lo[i] = std::min(t_lo[i], t[i]);
        t_hi[i] = std::max(t_hi[i], t[i]);
      }
    }
    // x = 2^-level i and 2x - t = 2^-(level+1) (4i - fine t) must land in the phi box.
    IntVec lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
      const std::int64_t phi_hi = phi.lower[i] + static_cast<std::int64_t>(phi.extent[i]) - 1;
      lo[i] = ceil_div(phi.lower[i] + fine * t_lo[i], 4);
      hi[i] = floor_div(phi_hi + fine * t_hi[i], 4);
    }
    DyadicGrid psi = make_grid(level, lo, hi);
    for (std::size_t idx = 0; idx < psi.values.size(); ++idx) {
      const IntVec x = psi.point(idx);
      double acc = 0.0;
      for (const auto& [t, c] : b.taps()) acc += c.to_double() * phi.at(4 * x - fine * t);
      psi.values[idx] = gain * acc;
    }
    // supp psi lies in (supp phi + supp b) / 2.
    psi.support_lower = IntVec(d);
    psi.support_upper = IntVec(d);
    for (std::size_t i = 0; i < d; ++i) {
      psi.support_lower[i] = floor_div(phi.support_lower[i] + t_lo[i], 2);
      psi.support_upper[i] = ceil_div(phi.support_upper[i] + t_hi[i], 2);
    }
    out.push_back(std::move(psi));
  }
  return out;
}

std::complex<double> boxspline_fourier_eval(const IntMatrix& p, std::span<const double> xi) {
  if (xi.size() != p.rows()) {
    throw DimensionMismatch(fmt::format("frequency of length {} for a {}-row direction matrix", xi.size(), p.rows()));
  }
  const std::complex<double> i_unit(0.0, 1.0);
  std::complex<double> product = 1.0;
  for (std::size_t c = 0; c < p.cols(); ++c) {
    double theta = 0.0;
    for (std::size_t r = 0; r < p.rows(); ++r) theta += static_cast<double>(p(r, c)) * xi[r];
    if (std::abs(theta) < 1e-6) {
      // Taylor series of (1 - e^{-i t}) / (i t) around t = 0.
      product *= 1.0 - i_unit * theta / 2.0 - theta * theta / 6.0 + i_unit * theta * theta * theta / 24.0;
    } else {
      product *= (1.0 - std::exp(-i_unit * theta)) / (i_unit * theta);
    }
  }
  return product;
}

std::string grid_to_csv(const DyadicGrid& grid) {
  std::ostringstream os;
  for (std::size_t i = 0; i < grid.dim(); ++i) os << 'x' << (i + 1) << ',';
  os << "value\n";
  const double step = std::ldexp(1.0, -static_cast<int>(grid.level));
  for (std::size_t idx = 0; idx < grid.values.size(); ++idx) {
    const IntVec k = grid.point(idx);
    for (std::size_t i = 0; i < grid.dim(); ++i) os << fmt::format("{:.17g},", step * static_cast<double>(k[i]));
    os << fmt::format("{:.17g}\n", grid.values[idx]);
  }
  return os.str();
}

}  // namespace framelet
