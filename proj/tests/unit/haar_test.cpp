// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "framelet/haar.hpp"
#include "framelet/verifier.hpp"
#include "support/fixtures.hpp"

using namespace framelet;
using framelet::testing::exact;
using framelet::testing::Q;

namespace {

std::size_t binomial2(std::size_t m) { return m * (m - 1) / 2; }

std::size_t pow3(std::size_t d) {
  std::size_t p = 1;
  for (std::size_t i = 0; i < d; ++i) p *= 3;
  return p;
}

/// Filter up to a global sign flip.
bool equal_up_to_sign(const Filter& a, const Filter& b) {
  return a == b || a == filter_scale(b, RadCoeff(-1, 1));
}

}  // namespace

TEST(HaarBank, OneDimensionalIsTheHaarWavelet) {
  const FilterBank bank = build_haar_bank(1);
  EXPECT_EQ(bank.lowpass(), Filter(1, {{IntVec{0}, exact("1/2")}, {IntVec{1}, exact("1/2")}}));
  ASSERT_EQ(bank.highpass().size(), 1U);
  EXPECT_EQ(bank.highpass()[0], two_tap(IntVec{0}, IntVec{1}, exact("1/2")));
}

TEST(HaarBank, TwoDimensionalMatchesPublishedList) {
  const RadCoeff q = exact("1/4");
  const std::vector<Filter> published{
      two_tap(IntVec{0, 0}, IntVec{1, 1}, q), two_tap(IntVec{1, 0}, IntVec{0, 1}, q),
      two_tap(IntVec{0, 0}, IntVec{0, 1}, q), two_tap(IntVec{0, 0}, IntVec{1, 0}, q),
      two_tap(IntVec{1, 0}, IntVec{1, 1}, q), two_tap(IntVec{0, 1}, IntVec{1, 1}, q),
  };
  const FilterBank bank = build_haar_bank(2);
  ASSERT_EQ(bank.highpass().size(), 6U);
  std::vector<bool> used(6, false);
  for (const auto& b : published) {
    bool found = false;
    for (std::size_t i = 0; i < 6 && !found; ++i) {
      if (!used[i] && equal_up_to_sign(bank.highpass()[i], b)) used[i] = found = true;
    }
    EXPECT_TRUE(found) << "missing published filter";
  }
}

TEST(HaarBank, DeterministicOrderAndSign) {
  const FilterBank bank = build_haar_bank(2);
  // Pairs of {00, 01, 10, 11} in lexicographic order, positive tap first.
  EXPECT_EQ(bank.highpass()[0], two_tap(IntVec{0, 0}, IntVec{0, 1}, exact("1/4")));
  EXPECT_EQ(bank.highpass()[2], two_tap(IntVec{0, 0}, IntVec{1, 1}, exact("1/4")));
  EXPECT_EQ(bank.highpass()[5], two_tap(IntVec{1, 0}, IntVec{1, 1}, exact("1/4")));
}

TEST(HaarBank, CountsAndDimensionCap) {
  EXPECT_EQ(build_haar_bank(3).highpass().size(), 28U);
  for (std::size_t d = 1; d <= 5; ++d) {
    EXPECT_EQ(build_haar_bank(d).highpass().size(), binomial2(std::size_t{1} << d));
  }
  EXPECT_THROW(build_haar_bank(7), DimensionTooLarge);
  EXPECT_NO_THROW(build_haar_bank(2, 2));
  EXPECT_THROW(build_haar_bank(3, 2), DimensionTooLarge);
  EXPECT_THROW(build_haar_bank(0), DimensionMismatch);
}

TEST(HaarBank, EachVertexInTwoToTheDMinusOneFilters) {
  for (std::size_t d = 1; d <= 4; ++d) {
    const FilterBank bank = build_haar_bank(d);
    for (const auto& gamma : cube_vertices(d)) {
      std::size_t count = 0;
      Rational energy = bank.lowpass().at(gamma).squared();
      for (const auto& h : bank.highpass()) {
        if (!h.at(gamma).is_zero()) ++count;
        energy += h.at(gamma).squared();
      }
      EXPECT_EQ(count, (std::size_t{1} << d) - 1);
      // Sum of squared coefficients at a vertex is 2^-d.
      EXPECT_EQ(energy, Rational(1, 1U << d));
    }
  }
}

TEST(HaarBank, PassesExactVerification) {
  for (std::size_t d = 1; d <= 4; ++d) EXPECT_TRUE(verify_tight_bank(build_haar_bank(d)).pass) << "d=" << d;
}

TEST(DirectionCensus, ThreeToTheDMinusOneOverTwo) {
  EXPECT_EQ(direction_census(build_haar_bank(2)).distinct(), 4U);
  EXPECT_EQ(direction_census(build_haar_bank(3)).distinct(), 13U);
  for (std::size_t d = 1; d <= 5; ++d) {
    EXPECT_EQ(direction_census(build_haar_bank(d)).distinct(), (pow3(d) - 1) / 2) << "d=" << d;
  }
}

TEST(DirectionCensus, BruteForceDirectionSet) {
  // Oracle: nonzero vectors of {-1,0,1}^3 with first nonzero entry positive.
  std::set<IntVec> expected;
  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) {
      for (int c = -1; c <= 1; ++c) {
        const IntVec v{a, b, c};
        if (v.is_zero()) continue;
        const int first = a != 0 ? a : (b != 0 ? b : c);
        if (first > 0) expected.insert(v);
      }
    }
  }
  std::set<IntVec> got;
  for (const auto& [dir, count] : direction_census(build_haar_bank(3)).counts) got.insert(dir.vector());
  EXPECT_EQ(got, expected);
}

TEST(DirectionVector, Canonicalization) {
  EXPECT_EQ(DirectionVector(IntVec{2, 0}).vector(), (IntVec{1, 0}));
  EXPECT_EQ(DirectionVector(IntVec{-2, 4}).vector(), (IntVec{1, -2}));
  EXPECT_EQ(DirectionVector(IntVec{0, -3, 6}).vector(), (IntVec{0, 1, -2}));
  EXPECT_THROW(DirectionVector(IntVec{0, 0}), std::invalid_argument);
  EXPECT_DOUBLE_EQ(DirectionVector(IntVec{1, -1}).slope_degrees(), -45.0);
  EXPECT_DOUBLE_EQ(DirectionVector(IntVec{0, 1}).slope_degrees(), 90.0);
}

TEST(DirectionCensus, RejectsNonTwoTapFilters) {
  const FilterBank bank(haar_lowpass(1), {haar_lowpass(1)});
  EXPECT_THROW(direction_census(bank), NotTwoTap);
  const FilterBank three(haar_lowpass(1), {Filter(1, {{IntVec{0}, exact("1")}, {IntVec{1}, exact("-1")},
                                                      {IntVec{2}, exact("1")}})});
  EXPECT_THROW(direction_census(three), NotTwoTap);
}
