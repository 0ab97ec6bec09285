// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#include "framelet/lattice.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace framelet {

namespace {

bool integer_sqrt(const mpz_class& n, mpz_class& root) {
  if (sgn(n) < 0 || mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

void check_dim(const IntVec& a, const IntVec& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(fmt::format("lattice vectors of dimension {} and {}", a.dim(), b.dim()));
  }
}

}  // namespace

bool rational_sqrt(const Rational& q, Rational& root) {
  mpz_class num, den;
  if (!integer_sqrt(q.get_num(), num) || !integer_sqrt(q.get_den(), den)) return false;
  root = Rational(num, den);
  root.canonicalize();
  return true;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// IntVec

bool IntVec::is_zero() const {
  for (auto e : entries_) {
    if (e != 0) return false;
  }
  return true;
}

IntVec& IntVec::operator+=(const IntVec& other) {
  check_dim(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

IntVec& IntVec::operator-=(const IntVec& other) {
  check_dim(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

IntVec operator*(std::int64_t s, IntVec v) {
  for (auto& e : v.entries_) e *= s;
  return v;
}

std::string to_string(const IntVec& v) {
  return fmt::format("({})", fmt::join(v.entries(), ","));
}

IntVec parity(const IntVec& v) {
  IntVec p(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) p[i] = ((v[i] % 2) + 2) % 2;
  return p;
}

std::vector<IntVec> cube_vertices(std::size_t d) {
  if (d >= 63) throw DimensionTooLarge("cube dimension too large to enumerate");
  std::vector<IntVec> out;
  out.reserve(std::size_t{1} << d);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    IntVec v(d);
    // Most significant bit is the first coordinate, giving lexicographic order.
    for (std::size_t i = 0; i < d; ++i) v[i] = static_cast<std::int64_t>((mask >> (d - 1 - i)) & 1U);
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// RadCoeff

RadCoeff::RadCoeff(int sign, Rational radicand) : sign_(sign), radicand_(std::move(radicand)) {
  radicand_.canonicalize();
  if (sign_ < -1 || sign_ > 1) throw std::invalid_argument("coefficient sign must be -1, 0 or 1");
  if (sgn(radicand_) < 0) throw std::invalid_argument("coefficient radicand must be nonnegative");
  if ((sign_ == 0) != (sgn(radicand_) == 0)) {
    throw std::invalid_argument("coefficient sign is zero iff radicand is zero");
  }
}

RadCoeff RadCoeff::from_rational(const Rational& q) { return RadCoeff(sgn(q), q * q); }

RadCoeff RadCoeff::sqrt_of(const Rational& q) { return RadCoeff(sgn(q), q); }

double RadCoeff::to_double() const { return sign_ * std::sqrt(radicand_.get_d()); }

bool RadCoeff::to_rational(Rational& out) const {
  Rational root;
  if (!rational_sqrt(radicand_, root)) return false;
  out = sign_ * root;
  return true;
}

RadCoeff operator*(const RadCoeff& x, const RadCoeff& y) {
  return RadCoeff(x.sign_ * y.sign_, x.radicand_ * y.radicand_);
}

std::string to_string(const RadCoeff& c) {
  Rational q;
  if (c.to_rational(q)) return to_string(q);
  return fmt::format("{}sqrt({})", c.sign() < 0 ? "-" : "", to_string(c.radicand()));
}

Rational coeff_mul_rational(const RadCoeff& x, const RadCoeff& y) {
  if (x.is_zero() || y.is_zero()) return 0;
  Rational root;
  if (!rational_sqrt(x.radicand() * y.radicand(), root)) {
    throw NonSquareProduct(fmt::format("product {} * {} is irrational", to_string(x), to_string(y)));
  }
  return x.sign() * y.sign() * root;
}

RadCoeff coeff_add(const RadCoeff& x, const RadCoeff& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  // x = q * |y|-root with q rational when radicand(x)/radicand(y) is a square.
  Rational ratio_root;
  if (!rational_sqrt(x.radicand() / y.radicand(), ratio_root)) {
    throw IncommensurableTaps(fmt::format("cannot add {} and {} exactly", to_string(x), to_string(y)));
  }
  Rational t = x.sign() * ratio_root + y.sign();
  return RadCoeff(sgn(t), t * t * y.radicand());
}

// ---------------------------------------------------------------------------
// Filter

Filter::Filter(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw DimensionMismatch("filter dimension must be positive");
}

Filter::Filter(std::size_t dim, TapMap taps) : Filter(dim) {
  for (auto& [k, c] : taps) {
    if (k.dim() != dim_) {
      throw DimensionMismatch(fmt::format("tap {} in a {}-dimensional filter", to_string(k), dim_));
    }
    if (!c.is_zero()) taps_.emplace(k, c);
  }
}

Filter::Filter(std::size_t dim, std::initializer_list<std::pair<const IntVec, RadCoeff>> taps)
    : Filter(dim, TapMap(taps)) {}

std::vector<IntVec> Filter::support() const {
  std::vector<IntVec> out;
  out.reserve(taps_.size());
  for (const auto& [k, c] : taps_) out.push_back(k);
  return out;
}

RadCoeff Filter::at(const IntVec& k) const {
  auto it = taps_.find(k);
  return it == taps_.end() ? RadCoeff() : it->second;
}

void FilterAccumulator::add(const IntVec& k, const RadCoeff& c) {
  if (k.dim() != dim_) {
    throw DimensionMismatch(fmt::format("tap {} in a {}-dimensional filter", to_string(k), dim_));
  }
  auto [it, inserted] = taps_.try_emplace(k, c);
  if (!inserted) it->second = coeff_add(it->second, c);
}

Filter dirac(std::size_t dim) { return Filter(dim, {{IntVec(dim), RadCoeff(1, 1)}}); }

Filter dirac_at(const IntVec& gamma) { return Filter(gamma.dim(), {{gamma, RadCoeff(1, 1)}}); }

Filter two_tap(const IntVec& plus, const IntVec& minus, const RadCoeff& c) {
  check_dim(plus, minus);
  if (plus == minus) throw std::invalid_argument("two-tap filter needs distinct offsets");
  return Filter(plus.dim(), {{plus, c}, {minus, -c}});
}

Filter filter_shift(const Filter& f, const IntVec& k) {
  if (k.dim() != f.dim()) {
    throw DimensionMismatch(fmt::format("shift {} of a {}-dimensional filter", to_string(k), f.dim()));
  }
  Filter::TapMap taps;
  for (const auto& [offset, c] : f.taps()) taps.emplace(offset + k, c);
  return Filter(f.dim(), std::move(taps));
}

Filter filter_scale(const Filter& f, const RadCoeff& c) {
  Filter::TapMap taps;
  for (const auto& [offset, t] : f.taps()) taps.emplace(offset, t * c);
  return Filter(f.dim(), std::move(taps));
}

std::complex<double> fourier_eval(const Filter& f, std::span<const double> xi) {
  if (xi.size() != f.dim()) {
    throw DimensionMismatch(fmt::format("frequency of length {} for a {}-dimensional filter", xi.size(), f.dim()));
  }
  std::complex<double> sum = 0.0;
  for (const auto& [k, c] : f.taps()) {
    double phase = 0.0;
    for (std::size_t i = 0; i < xi.size(); ++i) phase += static_cast<double>(k[i]) * xi[i];
    sum += c.to_double() * std::polar(1.0, -phase);
  }
  return sum;
}

RadCoeff filter_sum(const Filter& f) {
  RadCoeff total;
  for (const auto& [k, c] : f.taps()) total = coeff_add(total, c);
  return total;
}

// ---------------------------------------------------------------------------
// FilterBank

FilterBank::FilterBank(Filter lowpass, std::vector<Filter> highpass)
    : lowpass_(std::move(lowpass)), highpass_(std::move(highpass)) {
  for (const auto& h : highpass_) {
    if (h.dim() != lowpass_.dim()) {
      throw DimensionMismatch(
          fmt::format("high-pass filter of dimension {} in a {}-dimensional bank", h.dim(), lowpass_.dim()));
    }
  }
}

}  // namespace framelet
