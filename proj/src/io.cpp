// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#include "framelet/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace framelet::io {

using nlohmann::json;

namespace {

mpz_class parse_integer(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(fmt::format("{} must be a decimal string", what));
  const auto& s = j.get_ref<const std::string&>();
  mpz_class z;
  if (s.empty() || z.set_str(s, 10) != 0) throw ParseError(fmt::format("{} '{}' is not a decimal integer", what, s));
  return z;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(fmt::format("missing field '{}'", key));
  return j.at(key);
}

std::size_t parse_dim(const json& j) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1) throw ParseError("'dim' must be a positive integer");
  return j.get<std::size_t>();
}

json tensor_to_json(const Tensor<double>& t) { return {{"dims", t.dims()}, {"values", t.values()}}; }

Tensor<double> tensor_from_json(const json& j) {
  try {
    return Tensor<double>(field(j, "dims").get<std::vector<std::size_t>>(),
                          field(j, "values").get<std::vector<double>>());
  } catch (const json::exception& e) {
    throw ParseError(fmt::format("malformed tensor: {}", e.what()));
  }
}

}  // namespace

json coeff_to_json(const RadCoeff& c) {
  return {{"sign", c.sign()},
          {"radicand", {{"num", c.radicand().get_num().get_str()}, {"den", c.radicand().get_den().get_str()}}}};
}

RadCoeff coeff_from_json(const json& j) {
  const json& sign = field(j, "sign");
  if (!sign.is_number_integer()) throw ParseError("coefficient sign must be an integer");
  const json& radicand = field(j, "radicand");
  const mpz_class num = parse_integer(field(radicand, "num"), "radicand numerator");
  const mpz_class den = parse_integer(field(radicand, "den"), "radicand denominator");
  if (sgn(den) <= 0) throw ParseError("radicand denominator must be positive");
  try {
    return RadCoeff(sign.get<int>(), Rational(num, den));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json filter_to_json(const Filter& f) {
  json taps = json::array();
  for (const auto& [k, c] : f.taps()) {
    taps.push_back({{"offset", std::vector<std::int64_t>(k.entries().begin(), k.entries().end())},
                    {"coeff", coeff_to_json(c)}});
  }
  return {{"dim", f.dim()}, {"taps", taps}};
}

Filter filter_from_json(const json& j) {
  const std::size_t dim = parse_dim(field(j, "dim"));
  const json& taps = field(j, "taps");
  if (!taps.is_array()) throw ParseError("'taps' must be an array");
  Filter::TapMap map;
  for (const auto& tap : taps) {
    const json& offset = field(tap, "offset");
    if (!offset.is_array() || offset.size() != dim) {
      throw ParseError(fmt::format("tap offset must be an array of {} integers", dim));
    }
    IntVec k(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!offset[i].is_number_integer()) throw ParseError("tap offset entries must be integers");
      k[i] = offset[i].get<std::int64_t>();
    }
    if (!map.emplace(k, coeff_from_json(field(tap, "coeff"))).second) {
      throw ParseError(fmt::format("duplicate tap offset {}", to_string(k)));
    }
  }
  return Filter(dim, std::move(map));
}

json bank_to_json(const FilterBank& bank) {
  json highpass = json::array();
  for (const auto& h : bank.highpass()) highpass.push_back(filter_to_json(h));
  return {{"dim", bank.dim()}, {"lowpass", filter_to_json(bank.lowpass())}, {"highpass", highpass}};
}

FilterBank bank_from_json(const json& j) {
  const std::size_t dim = parse_dim(field(j, "dim"));
  Filter lowpass = filter_from_json(field(j, "lowpass"));
  const json& highpass = field(j, "highpass");
  if (!highpass.is_array()) throw ParseError("'highpass' must be an array");
  std::vector<Filter> filters;
  for (const auto& h : highpass) filters.push_back(filter_from_json(h));
  if (lowpass.dim() != dim) throw ParseError("low-pass dimension differs from the bank dimension");
  try {
    return FilterBank(std::move(lowpass), std::move(filters));
  } catch (const DimensionMismatch& e) {
    throw ParseError(e.what());
  }
}

std::string dump_bank(const FilterBank& bank) { return bank_to_json(bank).dump(2) + "\n"; }

FilterBank parse_bank(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(fmt::format("invalid JSON: {}", e.what()));
  }
  return bank_from_json(j);
}

IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<std::int64_t>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::vector<std::int64_t> row;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      std::int64_t value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) throw ParseError(fmt::format("matrix entry '{}' is not an integer", token));
      row.push_back(value);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

std::string format_matrix(const IntMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ' ';
      out += fmt::format("{}", m(r, c));
    }
    out += '\n';
  }
  return out;
}

Tensor<double> parse_tensor(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty tensor file");
  std::istringstream hs(header);
  std::string tag;
  hs >> tag;
  if (tag != "dims:") throw ParseError("tensor file must start with 'dims:'");
  std::vector<std::size_t> dims;
  long long n = 0;
  while (hs >> n) {
    if (n <= 0) throw ParseError("tensor dims must be positive");
    dims.push_back(static_cast<std::size_t>(n));
  }
  if (!hs.eof() || dims.empty()) throw ParseError("malformed tensor dims header");
  std::vector<double> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ParseError(fmt::format("tensor value '{}' is not a number", token));
    values.push_back(v);
  }
  return Tensor<double>(std::move(dims), std::move(values));
}

std::string format_tensor(const Tensor<double>& t) {
  std::string out = fmt::format("dims: {}\n", fmt::join(t.dims(), " "));
  const std::size_t row = t.dims().back();
  for (std::size_t i = 0; i < t.size(); ++i) {
    out += fmt::format("{:.17g}", t[i]);
    out += (i + 1) % row == 0 ? '\n' : ' ';
  }
  return out;
}

json pyramid_to_json(const CoefficientPyramid<double>& p) {
  json levels = json::array();
  for (std::size_t j = 0; j < p.levels.size(); ++j) {
    json details = json::array();
    for (std::size_t l = 0; l < p.levels[j].details.size(); ++l) {
      json entry = tensor_to_json(p.levels[j].details[l]);
      entry["filter"] = l + 1;
      details.push_back(std::move(entry));
    }
    levels.push_back({{"level", j + 1}, {"details", details}});
  }
  return {{"input_dims", p.input_dims}, {"levels", levels}, {"lowpass", tensor_to_json(p.lowpass)}};
}

CoefficientPyramid<double> pyramid_from_json(const json& j) {
  CoefficientPyramid<double> p;
  try {
    p.input_dims = field(j, "input_dims").get<std::vector<std::size_t>>();
    for (const auto& level : field(j, "levels")) {
      PyramidLevel<double> out;
      for (const auto& detail : field(level, "details")) out.details.push_back(tensor_from_json(detail));
      p.levels.push_back(std::move(out));
    }
  } catch (const json::exception& e) {
    throw ParseError(fmt::format("malformed pyramid: {}", e.what()));
  }
  p.lowpass = tensor_from_json(field(j, "lowpass"));
  return p;
}

json report_to_json(const VerificationReport& report) {
  auto vec = [](const IntVec& v) { return std::vector<std::int64_t>(v.entries().begin(), v.entries().end()); };
  auto cell = [&](const GramDefect& c) {
    return json{{"gamma", vec(c.gamma)},
                {"n", vec(c.n)},
                {"actual", to_string(c.actual)},
                {"expected", to_string(c.expected)},
                {"defect", to_string(c.defect())}};
  };
  json out{{"pass", report.pass}, {"cells_checked", report.cells_checked}};
  out["first_failure"] = report.first_failure ? cell(*report.first_failure) : json(nullptr);
  json cells = json::array();
  for (const auto& c : report.cells) cells.push_back(cell(c));
  out["cells"] = cells;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(fmt::format("cannot open '{}'", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(fmt::format("cannot write '{}'", path));
  out << contents;
}

}  // namespace framelet::io
