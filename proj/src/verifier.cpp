// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#include "framelet/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>

#include <fmt/format.h>

namespace framelet {

namespace {

void accumulate_gram(const Filter& f, std::map<GramKey, Rational>& cells) {
  // Every ordered tap pair (p, q) contributes f(p) f(q) to the cell
  // (gamma = p mod 2, n = q - p).
  for (const auto& [p, cp] : f.taps()) {
    const IntVec gamma = parity(p);
    for (const auto& [q, cq] : f.taps()) {
      Rational product;
      try {
        product = coeff_mul_rational(cp, cq);
      } catch (const NonSquareProduct& e) {
        throw IncommensurableTaps(e.what());
      }
      cells[{gamma, q - p}] += product;
    }
  }
}

std::vector<IntVec> difference_range(const FilterBank& bank, std::size_t widen) {
  std::set<IntVec> support;
  for (const auto& k : bank.lowpass().support()) support.insert(k);
  for (const auto& h : bank.highpass()) {
    for (const auto& k : h.support()) support.insert(k);
  }
  std::set<IntVec> diffs{IntVec(bank.dim())};
  for (const auto& u : support) {
    for (const auto& v : support) diffs.insert(u - v);
  }
  if (widen == 0) return {diffs.begin(), diffs.end()};

  const std::size_t d = bank.dim();
  IntVec lo(d), hi(d);
  for (const auto& n : diffs) {
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], n[i]);
      hi[i] = std::max(hi[i], n[i]);
    }
  }
  const auto w = static_cast<std::int64_t>(widen);
  std::vector<IntVec> box;
  IntVec cur(d);
  for (std::size_t i = 0; i < d; ++i) cur[i] = lo[i] - w;
  while (true) {
    box.push_back(cur);
    std::size_t axis = d;
    while (axis > 0) {
      --axis;
      if (cur[axis] < hi[axis] + w) {
        ++cur[axis];
        for (std::size_t j = axis + 1; j < d; ++j) cur[j] = lo[j] - w;
        break;
      }
      if (axis == 0) return box;
    }
  }
}

}  // namespace

std::map<GramKey, Rational> gram_sums(std::span<const Filter> filters) {
  std::map<GramKey, Rational> cells;
  for (const auto& f : filters) accumulate_gram(f, cells);
  std::erase_if(cells, [](const auto& cell) { return sgn(cell.second) == 0; });
  return cells;
}

VerificationReport verify_tight_bank(const FilterBank& bank, const VerifyOptions& options) {
  std::map<GramKey, Rational> cells;
  accumulate_gram(bank.lowpass(), cells);
  for (const auto& h : bank.highpass()) accumulate_gram(h, cells);

  const std::size_t d = bank.dim();
  mpz_class den = 1;
  den <<= static_cast<mp_bitcnt_t>(d);
  const Rational diagonal(1, den);
  const IntVec origin(d);

  VerificationReport report;
  const auto range = difference_range(bank, options.widen);
  for (const auto& gamma : cube_vertices(d)) {
    for (const auto& n : range) {
      GramDefect cell{gamma, n, 0, n == origin ? diagonal : Rational(0)};
      if (auto it = cells.find({gamma, n}); it != cells.end()) cell.actual = it->second;
      ++report.cells_checked;
      const bool ok = cell.actual == cell.expected;
      if (!ok && report.pass) {
        report.pass = false;
        report.first_failure = cell;
      }
      if (options.collect_cells) report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

namespace {

/// Values of a filter's Fourier series on the grid 2pi j / g, row-major over j in [0, g)^d.
std::vector<std::complex<double>> sample_on_grid(const Filter& f, std::size_t g) {
  const std::size_t d = f.dim();
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= g;
  std::vector<std::complex<double>> out(total);
  std::vector<double> xi(d);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (std::size_t i = d; i-- > 0;) {
      xi[i] = 2.0 * std::numbers::pi * static_cast<double>(rem % g) / static_cast<double>(g);
      rem /= g;
    }
    out[idx] = fourier_eval(f, xi);
  }
  return out;
}

}  // namespace

double verify_frequency(const FilterBank& bank, std::size_t grid_points_per_axis) {
  const std::size_t g = grid_points_per_axis;
  if (g < 2) throw std::invalid_argument("frequency grid needs at least 2 points per axis");
  const std::size_t d = bank.dim();
  const auto omegas = cube_vertices(d);
  double worst = 0.0;

  if (g % 2 == 0) {
    // xi + pi omega stays on the grid, so each filter is sampled once.
    std::vector<std::vector<std::complex<double>>> samples;
    samples.push_back(sample_on_grid(bank.lowpass(), g));
    for (const auto& h : bank.highpass()) samples.push_back(sample_on_grid(h, g));
    const std::size_t total = samples.front().size();
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::vector<std::size_t> j(d);
      std::size_t rem = idx;
      for (std::size_t i = d; i-- > 0;) {
        j[i] = rem % g;
        rem /= g;
      }
      for (const auto& omega : omegas) {
        std::size_t shifted = 0;
        for (std::size_t i = 0; i < d; ++i) {
          shifted = shifted * g + (j[i] + static_cast<std::size_t>(omega[i]) * (g / 2)) % g;
        }
        std::complex<double> sum = 0.0;
        for (const auto& s : samples) sum += s[idx] * std::conj(s[shifted]);
        const double target = omega.is_zero() ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(sum - target));
      }
    }
    return worst;
  }

  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= g;
  std::vector<double> xi(d), xi_shift(d);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rem = idx;
    for (std::size_t i = d; i-- > 0;) {
      xi[i] = 2.0 * std::numbers::pi * static_cast<double>(rem % g) / static_cast<double>(g);
      rem /= g;
    }
    for (const auto& omega : omegas) {
      for (std::size_t i = 0; i < d; ++i) xi_shift[i] = xi[i] + std::numbers::pi * static_cast<double>(omega[i]);
      std::complex<double> sum = fourier_eval(bank.lowpass(), xi) * std::conj(fourier_eval(bank.lowpass(), xi_shift));
      for (const auto& h : bank.highpass()) sum += fourier_eval(h, xi) * std::conj(fourier_eval(h, xi_shift));
      const double target = omega.is_zero() ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(sum - target));
    }
  }
  return worst;
}

}  // namespace framelet
