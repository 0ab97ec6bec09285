// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#include "framelet/transform.hpp"

#include <algorithm>
#include <cmath>

namespace framelet {

RoundTripDefects roundtrip_defects(const FilterBank& bank, const Tensor<double>& u, std::size_t levels) {
  const auto pyramid = analyze(bank, u, levels);
  const auto back = synthesize(bank, pyramid);

  double max_abs = 0.0;
  double max_err = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    max_abs = std::max(max_abs, std::abs(u[i]));
    max_err = std::max(max_err, std::abs(back[i] - u[i]));
  }
  const double energy = tensor_energy(u);
  RoundTripDefects out;
  out.reconstruction = max_abs > 0.0 ? max_err / max_abs : max_err;
  const double mismatch = std::abs(pyramid_energy(pyramid) - energy);
  out.parseval = energy > 0.0 ? mismatch / energy : mismatch;
  return out;
}

}  // namespace framelet
