// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "framelet/boxspline_bank.hpp"
#include "framelet/haar.hpp"
#include "framelet/io.hpp"
#include "framelet/transform.hpp"
#include "support/fixtures.hpp"

using namespace framelet;
using namespace framelet::testing;

namespace {

Tensor<double> random_tensor(std::mt19937_64& rng, std::vector<std::size_t> dims) {
  Tensor<double> t(std::move(dims));
  std::normal_distribution<double> g;
  for (auto& v : t.values()) v = g(rng);
  return t;
}

/// Oracle: 2^{d/2} sum_k u(k) h((k - 2n) mod N), summing over every k of the
/// torus and every tap congruent to k - 2n.
Tensor<double> analyze_brute(const Filter& h, const Tensor<double>& u) {
  std::vector<std::size_t> half(u.dims());
  for (auto& n : half) n /= 2;
  Tensor<double> out(half);
  const double scale = std::pow(2.0, static_cast<double>(h.dim()) / 2.0);
  for (std::size_t ni = 0; ni < out.size(); ++ni) {
    const IntVec n = out.point(ni);
    double acc = 0.0;
    for (std::size_t ki = 0; ki < u.size(); ++ki) {
      const IntVec k = u.point(ki);
      for (const auto& [t, c] : h.taps()) {
        bool congruent = true;
        for (std::size_t i = 0; i < h.dim(); ++i) {
          const auto len = static_cast<std::int64_t>(u.dims()[i]);
          congruent = congruent && (((k[i] - 2 * n[i] - t[i]) % len) + len) % len == 0;
        }
        if (congruent) acc += u[ki] * c.to_double();
      }
    }
    out[ni] = scale * acc;
  }
  return out;
}

std::vector<FilterBank> two_d_banks() {
  return {build_haar_bank(2), build_boxspline_bank(DirectionMatrix(example1_matrix()), BankMode::Combined),
          build_boxspline_bank(DirectionMatrix(example2_matrix()), BankMode::Combined)};
}

}  // namespace

TEST(Analyze, TwoByTwoBlockCoefficients) {
  // x1..x4 at vertices 00, 01, 10, 11 of the block at the origin; the level-one
  // coefficient at n = 0 reads only that block.
  const double x[4] = {1.0, 2.0, 3.0, 5.0};
  Tensor<double> u({4, 4});
  u[0] = x[0];
  u[1] = x[1];
  u[4] = x[2];
  u[5] = x[3];
  const auto p = analyze(build_haar_bank(2), u, 1);
  EXPECT_DOUBLE_EQ(p.lowpass[0], (x[0] + x[1] + x[2] + x[3]) / 2.0);
  std::size_t l = 0;
  for (int j = 0; j < 4; ++j) {
    for (int k = j + 1; k < 4; ++k, ++l) EXPECT_DOUBLE_EQ(p.levels[0].details[l][0], (x[j] - x[k]) / 2.0);
  }
}

TEST(Analyze, ConstantsHaveZeroDetails) {
  for (const auto& bank : two_d_banks()) {
    Tensor<double> u({8, 8});
    for (auto& v : u.values()) v = 3.25;
    const auto p = analyze(bank, u, 2);
    for (const auto& level : p.levels) {
      for (const auto& t : level.details) {
        for (double v : t.values()) EXPECT_EQ(v, 0.0);
      }
    }
  }
}

TEST(Analyze, MatchesDirectSummationOracle) {
  // Dirac at the origin, d = 1 Haar, N = 4.
  const FilterBank haar1 = build_haar_bank(1);
  const Tensor<double> delta({4}, {1.0, 0.0, 0.0, 0.0});
  const auto p = analyze(haar1, delta, 1);
  const auto low = analyze_brute(haar1.lowpass(), delta);
  EXPECT_NEAR(low[0], std::sqrt(2.0) / 2.0, 1e-15);
  EXPECT_EQ(low[1], 0.0);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_NEAR(p.lowpass[i], low[i], 1e-15);

  std::mt19937_64 rng(4);
  for (const auto& bank : two_d_banks()) {
    const Tensor<double> u = random_tensor(rng, {6, 4});
    const auto q = analyze(bank, u, 1);
    const auto expected_low = analyze_brute(bank.lowpass(), u);
    for (std::size_t i = 0; i < u.size() / 4; ++i) EXPECT_NEAR(q.lowpass[i], expected_low[i], 1e-12);
    for (std::size_t l = 0; l < bank.highpass().size(); ++l) {
      const auto expected = analyze_brute(bank.highpass()[l], u);
      for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(q.levels[0].details[l][i], expected[i], 1e-12);
    }
  }
}

TEST(Analyze, RejectsBadShapes) {
  const FilterBank bank = build_haar_bank(2);
  EXPECT_THROW(analyze(bank, Tensor<double>({6, 8}), 2), BadDims);
  EXPECT_THROW(analyze(bank, Tensor<double>({4, 4}), 2), BadDims);
  EXPECT_THROW(analyze(bank, Tensor<double>({5, 4}), 1), BadDims);
  EXPECT_THROW(analyze(bank, Tensor<double>({4, 4}), 0), BadDims);
  EXPECT_THROW(analyze(bank, Tensor<double>({4, 4, 4}), 1), DimensionMismatch);
}

TEST(Synthesize, PerfectReconstructionAndParseval) {
  std::mt19937_64 rng(17);
  for (const auto& bank : two_d_banks()) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto u = random_tensor(rng, {16, 16});
      const auto defects = roundtrip_defects(bank, u, 2);
      EXPECT_LE(defects.reconstruction, 1e-10);
      EXPECT_LE(defects.parseval, 1e-10);
    }
  }
  const auto u3 = random_tensor(rng, {8, 8, 8});
  const auto d3 = roundtrip_defects(build_haar_bank(3), u3, 1);
  EXPECT_LE(d3.reconstruction, 1e-10);
  EXPECT_LE(d3.parseval, 1e-10);
}

TEST(Synthesize, ZeroPyramidGivesZero) {
  const FilterBank bank = build_haar_bank(2);
  const auto p = analyze(bank, Tensor<double>({8, 8}), 2);
  EXPECT_EQ(pyramid_energy(p), 0.0);
  const auto u = synthesize(bank, p);
  for (double v : u.values()) EXPECT_EQ(v, 0.0);
}

TEST(Synthesize, RejectsMismatchedPyramids) {
  const FilterBank bank = build_haar_bank(2);
  auto p = analyze(bank, Tensor<double>({8, 8}), 2);
  EXPECT_THROW(synthesize(build_haar_bank(1), p), ShapeMismatch);
  auto missing = p;
  missing.levels[1].details.pop_back();
  EXPECT_THROW(synthesize(bank, missing), ShapeMismatch);
  auto wrong = p;
  wrong.lowpass = Tensor<double>({4, 4});
  EXPECT_THROW(synthesize(bank, wrong), ShapeMismatch);
  EXPECT_THROW(synthesize(bank, CoefficientPyramid<double>{}), ShapeMismatch);
}

TEST(ExactTransform, TwoByTwoBlockIdentity) {
  const FilterBank bank = build_haar_bank(2);
  const std::vector<Rational> x{Q("3/7"), Q("-2"), Q("5/3"), Q("11/13")};
  Tensor<Rational> padded({4, 4});
  padded[0] = x[0];
  padded[1] = x[1];
  padded[4] = x[2];
  padded[5] = x[3];
  const auto p = analyze(bank, padded, 1);
  EXPECT_EQ(p.lowpass[0], (x[0] + x[1] + x[2] + x[3]) / 2);
  std::size_t l = 0;
  for (int j = 0; j < 4; ++j) {
    for (int k = j + 1; k < 4; ++k, ++l) EXPECT_EQ(p.levels[0].details[l][0], (x[j] - x[k]) / 2);
  }
  EXPECT_EQ(pyramid_energy(p), x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
  EXPECT_EQ(synthesize(bank, p), padded);
}

TEST(ExactTransform, RandomRationalRoundTrip) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 9);
  const FilterBank bank = build_haar_bank(2);
  Tensor<Rational> u({8, 8});
  for (auto& v : u.values()) v = Rational(num(rng), den(rng));
  for (auto& v : u.values()) v.canonicalize();
  const auto p = analyze(bank, u, 2);
  EXPECT_EQ(pyramid_energy(p), tensor_energy(u));
  EXPECT_EQ(synthesize(bank, p), u);
}

TEST(ExactTransform, IrrationalScaledTapsAreRejected) {
  // 2^{1/2} * 1/2 is irrational in d = 1.
  EXPECT_THROW(analyze(build_haar_bank(1), Tensor<Rational>({4}), 1), InexactCoefficient);
  const FilterBank ex1 = build_boxspline_bank(DirectionMatrix(example1_matrix()), BankMode::Combined);
  EXPECT_THROW(analyze(ex1, Tensor<Rational>({4, 4}), 1), InexactCoefficient);
}

TEST(TransformProperties, Linearity) {
  std::mt19937_64 rng(41);
  const FilterBank bank = two_d_banks()[2];
  const auto u = random_tensor(rng, {8, 8});
  const auto v = random_tensor(rng, {8, 8});
  const double alpha = 1.5, beta = -0.25;
  Tensor<double> w({8, 8});
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = alpha * u[i] + beta * v[i];
  const auto pu = analyze(bank, u, 2), pv = analyze(bank, v, 2), pw = analyze(bank, w, 2);
  for (std::size_t i = 0; i < pw.lowpass.size(); ++i) {
    EXPECT_NEAR(pw.lowpass[i], alpha * pu.lowpass[i] + beta * pv.lowpass[i], 1e-12);
  }
  for (std::size_t j = 0; j < pw.levels.size(); ++j) {
    for (std::size_t l = 0; l < pw.levels[j].details.size(); ++l) {
      for (std::size_t i = 0; i < pw.levels[j].details[l].size(); ++i) {
        EXPECT_NEAR(pw.levels[j].details[l][i],
                    alpha * pu.levels[j].details[l][i] + beta * pv.levels[j].details[l][i], 1e-12);
      }
    }
  }
}

TEST(TransformProperties, CorruptedBankBreaksParseval) {
  std::mt19937_64 rng(43);
  const FilterBank bank = build_haar_bank(2);
  std::vector<Filter> hp = bank.highpass();
  // Perturb one weight by 1e-2: 1/4 -> 1/4 + 1/100.
  hp[0] = two_tap(IntVec{0, 0}, IntVec{0, 1}, exact("26/100"));
  const FilterBank bad(bank.lowpass(), hp);
  const auto u = random_tensor(rng, {16, 16});
  EXPECT_GT(roundtrip_defects(bad, u, 1).parseval, 1e-5);
}

TEST(TensorIo, TextRoundTripAndErrors) {
  std::mt19937_64 rng(2);
  const auto t = random_tensor(rng, {4, 6});
  EXPECT_EQ(io::parse_tensor(io::format_tensor(t)), t);
  EXPECT_THROW(io::parse_tensor("dims: 2 2\n1 2 3\n"), ShapeMismatch);
  EXPECT_THROW(io::parse_tensor("size: 2\n1 2\n"), ParseError);
  EXPECT_THROW(io::parse_tensor("dims: 2\n1 x\n"), ParseError);
}

TEST(PyramidIo, JsonRoundTrip) {
  std::mt19937_64 rng(12);
  const FilterBank bank = build_haar_bank(2);
  const auto p = analyze(bank, random_tensor(rng, {8, 8}), 2);
  const auto back = io::pyramid_from_json(nlohmann::json::parse(io::pyramid_to_json(p).dump()));
  EXPECT_EQ(back.input_dims, p.input_dims);
  EXPECT_EQ(back.lowpass, p.lowpass);
  ASSERT_EQ(back.levels.size(), p.levels.size());
  for (std::size_t j = 0; j < p.levels.size(); ++j) EXPECT_EQ(back.levels[j].details, p.levels[j].details);
}
