// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#include "framelet/boxspline_bank.hpp"

#include <map>
#include <optional>
#include <sstream>

#include <fmt/format.h>

#include "framelet/haar.hpp"

namespace framelet {

namespace {

FilterBank combined_bank(const DirectionMatrix& p) {
  Filter mask = boxspline_mask(p);
  const auto support = mask.support();
  std::vector<std::size_t> fiber_sizes;
  fiber_sizes.reserve(support.size());
  for (const auto& gamma : support) fiber_sizes.push_back(preimage_vertices(p.matrix(), gamma).size());

  mpz_class scale = 1;
  scale <<= static_cast<mp_bitcnt_t>(2 * p.cols());
  std::vector<Filter> highpass;
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (std::size_t j = i + 1; j < support.size(); ++j) {
      const Rational radicand(mpz_class(fiber_sizes[i] * fiber_sizes[j]), scale);
      highpass.push_back(two_tap(support[i], support[j], RadCoeff::sqrt_of(radicand)));
    }
  }
  return FilterBank(std::move(mask), std::move(highpass));
}

FilterBank projected_bank(const DirectionMatrix& p) {
  const FilterBank haar = build_haar_bank(p.cols(), p.cols());
  std::vector<Filter> highpass;
  for (const auto& b : haar.highpass()) {
    Filter projected = project_filter(p.matrix(), b);
    if (!projected.empty()) highpass.push_back(std::move(projected));
  }
  return FilterBank(boxspline_mask(p), std::move(highpass));
}

/// Tap pair with plus/minus ordered lexicographically as (low, high).
struct Oriented {
  IntVec low;
  IntVec high;
  int low_sign;  // sign of the tap at low
  Rational weight_squared;
};

Oriented orient(const Filter& f) {
  const auto view = as_two_tap(f, true);
  if (view.plus < view.minus) return {view.plus, view.minus, 1, view.weight.squared()};
  return {view.minus, view.plus, -1, view.weight.squared()};
}

/// Two tap pairs are even translates of each other iff they share this key.
std::pair<IntVec, IntVec> shift_class(const Oriented& e) { return {parity(e.low), e.high - e.low}; }

Filter rebuild(const Oriented& anchor, const Rational& weight_squared) {
  const RadCoeff w = RadCoeff::sqrt_of(weight_squared);
  return anchor.low_sign > 0 ? two_tap(anchor.low, anchor.high, w) : two_tap(anchor.high, anchor.low, w);
}

}  // namespace

FilterBank build_boxspline_bank(const DirectionMatrix& p, BankMode mode) {
  return mode == BankMode::Combined ? combined_bank(p) : projected_bank(p);
}

FilterBank reduce_bank(const FilterBank& bank, ReduceMode mode) {
  std::vector<Oriented> edges;
  edges.reserve(bank.highpass().size());
  for (const auto& h : bank.highpass()) edges.push_back(orient(h));

  std::vector<Filter> out;
  if (mode == ReduceMode::FullClass) {
    std::map<std::pair<IntVec, IntVec>, std::size_t> slot_of_class;
    std::vector<Oriented> anchors;
    std::vector<Rational> totals;
    for (const auto& e : edges) {
      auto [it, inserted] = slot_of_class.try_emplace(shift_class(e), anchors.size());
      if (inserted) {
        anchors.push_back(e);
        totals.push_back(e.weight_squared);
        continue;
      }
      totals[it->second] += e.weight_squared;
      if (e.low < anchors[it->second].low) anchors[it->second] = e;
    }
    for (std::size_t i = 0; i < anchors.size(); ++i) out.push_back(rebuild(anchors[i], totals[i]));
    return FilterBank(bank.lowpass(), std::move(out));
  }

  std::vector<bool> merged(edges.size(), false);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (merged[i]) continue;
    std::optional<std::size_t> partner;
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!merged[j] && edges[j].weight_squared == edges[i].weight_squared &&
          shift_class(edges[j]) == shift_class(edges[i])) {
        partner = j;
        break;
      }
    }
    if (!partner) {
      out.push_back(bank.highpass()[i]);
      continue;
    }
    merged[*partner] = true;
    const Oriented& anchor = edges[*partner].low < edges[i].low ? edges[*partner] : edges[i];
    out.push_back(rebuild(anchor, 2 * edges[i].weight_squared));
  }
  return FilterBank(bank.lowpass(), std::move(out));
}

std::vector<Edge> edge_list(const FilterBank& bank) {
  std::vector<Edge> edges;
  for (const auto& h : bank.highpass()) {
    const auto view = as_two_tap(h, true);
    const DirectionVector dir(view.plus - view.minus);
    edges.push_back({view.plus, view.minus, view.weight.squared(), dir.vector(), dir.slope_degrees()});
  }
  return edges;
}

std::string edges_to_csv(const std::vector<Edge>& edges) {
  auto vec = [](const IntVec& v) { return fmt::format("{}", fmt::join(v.entries(), " ")); };
  std::ostringstream os;
  os << "gamma1,gamma2,weight_num,weight_den,direction,slope_degrees\n";
  for (const auto& e : edges) {
    os << fmt::format("{},{},{},{},{},{:.17g}\n", vec(e.plus), vec(e.minus), e.weight_squared.get_num().get_str(),
                      e.weight_squared.get_den().get_str(), vec(e.direction), e.slope_degrees);
  }
  return os.str();
}

BankMode parse_bank_mode(const std::string& s) {
  if (s == "projected") return BankMode::Projected;
  if (s == "combined") return BankMode::Combined;
  throw ParseError(fmt::format("unknown bank mode '{}'", s));
}

}  // namespace framelet
