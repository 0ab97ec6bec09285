// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

// Command-line front end: builds, checks, transforms and renders framelet banks.
// Exit status: 0 success / pass, 1 verification failure, 2 bad input.

#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "framelet/boxspline_bank.hpp"
#include "framelet/cascade.hpp"
#include "framelet/haar.hpp"
#include "framelet/io.hpp"
#include "framelet/projector.hpp"
#include "framelet/transform.hpp"
#include "framelet/verifier.hpp"

namespace {

using namespace framelet;

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

/// Writes to path, or to stdout when path is empty or "-".
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    io::write_file(path, text);
  }
}

std::string vec_str(const IntVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i > 0) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

IntVec parse_point(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::int64_t> entries;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    try {
      entries.push_back(std::stoll(token, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ParseError(fmt::format("point entry '{}' is not an integer", token));
  }
  if (entries.empty()) throw ParseError("empty point");
  IntVec v(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) v[i] = entries[i];
  return v;
}

ReduceMode parse_reduce(const std::string& s) {
  if (s == "pairs") return ReduceMode::EqualWeightPairs;
  if (s == "full") return ReduceMode::FullClass;
  throw ParseError(fmt::format("unknown reduction '{}'", s));
}

struct Options {
  std::size_t dim = 2;
  std::string out;
  std::string matrix;
  std::string mode = "combined";
  std::string reduce = "none";
  std::string bank;
  std::size_t grid = 0;
  std::string report;
  std::string edges;
  std::string input;
  std::size_t levels = 1;
  std::vector<std::size_t> random_dims;
  std::uint64_t seed = 1;
  std::size_t iters = 6;
  std::size_t psi = 0;
  std::string point;
};

int run_haar(const Options& o) {
  emit(o.out, io::dump_bank(build_haar_bank(o.dim)));
  return 0;
}

int run_boxspline(const Options& o) {
  const DirectionMatrix p(io::parse_matrix(io::read_file(o.matrix)));
  FilterBank bank = build_boxspline_bank(p, parse_bank_mode(o.mode));
  if (o.reduce != "none") bank = reduce_bank(bank, parse_reduce(o.reduce));
  emit(o.out, io::dump_bank(bank));
  return 0;
}

int run_verify(const Options& o) {
  const FilterBank bank = io::parse_bank(io::read_file(o.bank));
  VerifyOptions options;
  options.collect_cells = !o.report.empty();
  const VerificationReport report = verify_tight_bank(bank, options);
  bool pass = report.pass;
  if (report.pass) {
    std::cout << fmt::format("exact: pass ({} cells)\n", report.cells_checked);
  } else {
    const GramDefect& f = *report.first_failure;
    std::cout << fmt::format("exact: fail at gamma=({}) n=({}): sum {} expected {}\n", vec_str(f.gamma), vec_str(f.n),
                             to_string(f.actual), to_string(f.expected));
  }
  if (o.grid > 0) {
    const double defect = verify_frequency(bank, o.grid);
    const bool ok = defect <= 1e-10;
    std::cout << fmt::format("frequency: {} (max defect {:.17g} on a {}-point grid)\n", ok ? "pass" : "fail", defect,
                             o.grid);
    pass = pass && ok;
  }
  if (!o.report.empty()) emit(o.report, io::report_to_json(report).dump(2) + "\n");
  return pass ? 0 : kExitFail;
}

int run_census(const Options& o) {
  const FilterBank bank = io::parse_bank(io::read_file(o.bank));
  const DirectionCensus census = direction_census(bank);
  std::vector<std::pair<DirectionVector, std::size_t>> rows(census.counts.begin(), census.counts.end());
  const bool planar = bank.dim() == 2;
  if (planar) {
    // Counter-clockwise from the positive x axis.
    auto angle = [](const DirectionVector& v) {
      const double s = v.slope_degrees();
      return s < 0 ? s + 180.0 : s;
    };
    std::stable_sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) { return angle(a.first) < angle(b.first); });
  }
  std::cout << fmt::format("filters: {}\ndirections: {}\n", bank.highpass().size(), census.distinct());
  for (const auto& [dir, count] : rows) {
    if (planar) {
      std::cout << fmt::format("direction {} count {} slope {:.17g}\n", vec_str(dir.vector()), count,
                               dir.slope_degrees());
    } else {
      std::cout << fmt::format("direction {} count {}\n", vec_str(dir.vector()), count);
    }
  }
  if (!o.edges.empty()) emit(o.edges, edges_to_csv(edge_list(bank)));
  return 0;
}

Tensor<double> load_or_draw(const Options& o) {
  if (!o.input.empty()) return io::parse_tensor(io::read_file(o.input));
  if (o.random_dims.empty()) throw ParseError("give --in or --random");
  std::mt19937_64 rng(o.seed);
  std::normal_distribution<double> g;
  Tensor<double> u(o.random_dims);
  for (auto& v : u.values()) v = g(rng);
  return u;
}

int run_analyze(const Options& o) {
  const FilterBank bank = io::parse_bank(io::read_file(o.bank));
  const auto p = analyze(bank, io::parse_tensor(io::read_file(o.input)), o.levels);
  emit(o.out, io::pyramid_to_json(p).dump(2) + "\n");
  return 0;
}

int run_synthesize(const Options& o) {
  const FilterBank bank = io::parse_bank(io::read_file(o.bank));
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(io::read_file(o.input));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(fmt::format("invalid JSON: {}", e.what()));
  }
  emit(o.out, io::format_tensor(synthesize(bank, io::pyramid_from_json(j))));
  return 0;
}

int run_roundtrip(const Options& o) {
  const FilterBank bank = io::parse_bank(io::read_file(o.bank));
  const auto defects = roundtrip_defects(bank, load_or_draw(o), o.levels);
  std::cout << fmt::format("reconstruction_defect {:.17g}\nparseval_defect {:.17g}\n", defects.reconstruction,
                           defects.parseval);
  return 0;
}

int run_render(const Options& o) {
  const FilterBank bank = io::parse_bank(io::read_file(o.bank));
  if (o.psi == 0) {
    emit(o.out, grid_to_csv(cascade_phi(bank.lowpass(), o.iters)));
    return 0;
  }
  if (o.psi > bank.highpass().size()) {
    throw ParseError(fmt::format("--psi {} out of range, the bank has {} high-pass filters", o.psi,
                                 bank.highpass().size()));
  }
  if (o.iters + 1 > kMaxCascadeLevel) throw DimensionTooLarge(fmt::format("--iters {} too large for --psi", o.iters));
  // Only the requested framelet is evaluated.
  const FilterBank one(bank.lowpass(), {bank.highpass()[o.psi - 1]});
  const auto psi = sample_psi(one, cascade_phi(bank.lowpass(), o.iters + 1), o.iters);
  emit(o.out, grid_to_csv(psi.front()));
  return 0;
}

int run_fibers(const Options& o) {
  const IntMatrix p = io::parse_matrix(io::read_file(o.matrix));
  for (const auto& v : preimage_vertices(p, parse_point(o.point))) std::cout << vec_str(v) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directional tight framelet filter banks"};
  app.require_subcommand(1);
  Options o;
  int (*handler)(const Options&) = nullptr;
  auto on = [&](CLI::App* sub, int (*fn)(const Options&)) { sub->callback([&handler, fn] { handler = fn; }); };

  auto* haar = app.add_subcommand("haar", "Write the d-dimensional Haar framelet bank");
  haar->add_option("--dim", o.dim, "Dimension d")->required()->check(CLI::Range(1, 6));
  haar->add_option("--out", o.out, "Output bank JSON (default stdout)");
  on(haar, run_haar);

  auto* box = app.add_subcommand("boxspline", "Write the box-spline framelet bank of a direction matrix");
  box->add_option("--matrix", o.matrix, "Direction matrix text file")->required();
  box->add_option("--mode", o.mode, "projected or combined")->check(CLI::IsMember({"projected", "combined"}));
  box->add_option("--reduce", o.reduce, "none, pairs or full")->check(CLI::IsMember({"none", "pairs", "full"}));
  box->add_option("--out", o.out, "Output bank JSON (default stdout)");
  on(box, run_boxspline);

  auto* verify = app.add_subcommand("verify", "Check the tight framelet identities exactly");
  verify->add_option("bank", o.bank, "Bank JSON")->required();
  verify->add_option("--frequency", o.grid, "Also sample the frequency identities on a GRID^d grid")
      ->check(CLI::Range(2, 1024));
  verify->add_option("--report", o.report, "Write a JSON report with every checked cell");
  on(verify, run_verify);

  auto* census = app.add_subcommand("census", "Count the directions of a two-tap bank");
  census->add_option("bank", o.bank, "Bank JSON")->required();
  census->add_option("--edges", o.edges, "Write the edge list as CSV");
  on(census, run_census);

  auto* transform = app.add_subcommand("transform", "Fast framelet transform on the torus");
  transform->require_subcommand(1);
  auto* analyze_cmd = transform->add_subcommand("analyze", "Tensor text to pyramid JSON");
  auto* synth_cmd = transform->add_subcommand("synthesize", "Pyramid JSON to tensor text");
  auto* round_cmd = transform->add_subcommand("roundtrip", "Print reconstruction and Parseval defects");
  for (auto* sub : {analyze_cmd, synth_cmd, round_cmd}) {
    sub->add_option("--bank", o.bank, "Bank JSON")->required();
    sub->add_option("--in", o.input, "Input file");
  }
  for (auto* sub : {analyze_cmd, round_cmd}) sub->add_option("--levels", o.levels, "Decomposition levels J");
  for (auto* sub : {analyze_cmd, synth_cmd}) sub->add_option("--out", o.out, "Output file (default stdout)");
  analyze_cmd->get_option("--in")->required();
  synth_cmd->get_option("--in")->required();
  round_cmd->add_option("--random", o.random_dims, "Draw a Gaussian tensor of these dims instead of --in");
  round_cmd->add_option("--seed", o.seed, "Seed for --random");
  on(analyze_cmd, run_analyze);
  on(synth_cmd, run_synthesize);
  on(round_cmd, run_roundtrip);

  auto* render = app.add_subcommand("render", "Sample phi or a framelet on a dyadic grid");
  render->add_option("--bank", o.bank, "Bank JSON")->required();
  render->add_option("--iters", o.iters, "Grid level J (spacing 2^-J)")->check(CLI::Range(std::size_t{0}, kMaxCascadeLevel));
  render->add_option("--out", o.out, "Output CSV (default stdout)");
  render->add_option("--psi", o.psi, "1-based high-pass index; omit for phi");
  on(render, run_render);

  auto* fibers = app.add_subcommand("fibers", "List the cube vertices over a lattice point");
  fibers->add_option("--matrix", o.matrix, "Direction matrix text file")->required();
  fibers->add_option("--point", o.point, "Lattice point, e.g. \"1 0\"")->required();
  on(fibers, run_fibers);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    return handler(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
