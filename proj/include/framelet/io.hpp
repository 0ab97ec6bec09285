// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "framelet/lattice.hpp"
#include "framelet/projector.hpp"
#include "framelet/transform.hpp"
#include "framelet/verifier.hpp"

namespace framelet::io {

// Bank interchange:
//   coefficient {"sign": -1|0|1, "radicand": {"num": "<int>", "den": "<int>"}}
//   filter      {"dim": d, "taps": [{"offset": [..], "coeff": <coefficient>}]}
//   bank        {"dim": d, "lowpass": <filter>, "highpass": [<filter>, ...]}
// Parsers throw ParseError on malformed input, including duplicate offsets.

nlohmann::json coeff_to_json(const RadCoeff& c);
RadCoeff coeff_from_json(const nlohmann::json& j);
nlohmann::json filter_to_json(const Filter& f);
Filter filter_from_json(const nlohmann::json& j);
nlohmann::json bank_to_json(const FilterBank& bank);
FilterBank bank_from_json(const nlohmann::json& j);

std::string dump_bank(const FilterBank& bank);
FilterBank parse_bank(const std::string& text);

/// One matrix row per line, whitespace-separated integers.
IntMatrix parse_matrix(const std::string& text);
std::string format_matrix(const IntMatrix& m);

/// "dims: N1 ... Nd" header, then row-major values.
Tensor<double> parse_tensor(const std::string& text);
std::string format_tensor(const Tensor<double>& t);

nlohmann::json pyramid_to_json(const CoefficientPyramid<double>& p);
CoefficientPyramid<double> pyramid_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace framelet::io
