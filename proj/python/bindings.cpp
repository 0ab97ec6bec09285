// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The framelet Authors

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "framelet/boxspline_bank.hpp"
#include "framelet/cascade.hpp"
#include "framelet/haar.hpp"
#include "framelet/io.hpp"
#include "framelet/projector.hpp"
#include "framelet/transform.hpp"
#include "framelet/verifier.hpp"

namespace py = pybind11;
using namespace framelet;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;
using IntArray = py::array_t<std::int64_t, py::array::c_style | py::array::forcecast>;

IntMatrix to_matrix(const IntArray& a) {
  if (a.ndim() != 2) throw py::value_error("direction matrix must be two-dimensional");
  IntMatrix m(static_cast<std::size_t>(a.shape(0)), static_cast<std::size_t>(a.shape(1)));
  auto r = a.unchecked<2>();
  for (py::ssize_t i = 0; i < a.shape(0); ++i) {
    for (py::ssize_t j = 0; j < a.shape(1); ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = r(i, j);
  }
  return m;
}

IntVec to_intvec(const std::vector<std::int64_t>& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

py::tuple to_tuple(const IntVec& v) {
  py::tuple t(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) t[i] = v[i];
  return t;
}

Tensor<double> to_tensor(const Array& a) {
  std::vector<std::size_t> dims(a.shape(), a.shape() + a.ndim());
  return Tensor<double>(dims, std::vector<double>(a.data(), a.data() + a.size()));
}

Array to_array(const Tensor<double>& t) {
  Array out(std::vector<py::ssize_t>(t.dims().begin(), t.dims().end()));
  std::copy(t.values().begin(), t.values().end(), out.mutable_data());
  return out;
}

/// Taps as {offset tuple: float}.
py::dict taps_dict(const Filter& f) {
  py::dict d;
  for (const auto& [k, c] : f.taps()) d[to_tuple(k)] = c.to_double();
  return d;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["pass"] = r.pass;
  d["cells_checked"] = r.cells_checked;
  if (r.first_failure) {
    py::dict f;
    f["gamma"] = to_tuple(r.first_failure->gamma);
    f["n"] = to_tuple(r.first_failure->n);
    f["actual"] = to_string(r.first_failure->actual);
    f["expected"] = to_string(r.first_failure->expected);
    d["first_failure"] = f;
  } else {
    d["first_failure"] = py::none();
  }
  return d;
}

py::dict grid_dict(const DyadicGrid& g) {
  py::dict d;
  d["level"] = g.level;
  d["lower"] = to_tuple(g.lower);
  Array values(std::vector<py::ssize_t>(g.extent.begin(), g.extent.end()));
  std::copy(g.values.begin(), g.values.end(), values.mutable_data());
  d["values"] = values;
  return d;
}

/// Pyramid as {"levels": [[detail arrays] per level], "lowpass": array}.
py::dict pyramid_dict(const CoefficientPyramid<double>& p) {
  py::list levels;
  for (const auto& level : p.levels) {
    py::list details;
    for (const auto& t : level.details) details.append(to_array(t));
    levels.append(details);
  }
  py::dict d;
  d["levels"] = levels;
  d["lowpass"] = to_array(p.lowpass);
  return d;
}

CoefficientPyramid<double> pyramid_from(const py::dict& d, const std::vector<std::size_t>& shape) {
  CoefficientPyramid<double> p;
  p.input_dims = shape;
  for (const auto& level : d["levels"].cast<py::list>()) {
    PyramidLevel<double> out;
    for (const auto& t : level.cast<py::list>()) out.details.push_back(to_tensor(t.cast<Array>()));
    p.levels.push_back(std::move(out));
  }
  p.lowpass = to_tensor(d["lowpass"].cast<Array>());
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Directional tight framelet filter banks";

  py::register_exception<Error>(m, "FrameletError", PyExc_ValueError);

  py::class_<FilterBank>(m, "Bank")
      .def_property_readonly("dim", &FilterBank::dim)
      .def_property_readonly("num_highpass", [](const FilterBank& b) { return b.highpass().size(); })
      .def_property_readonly("lowpass", [](const FilterBank& b) { return taps_dict(b.lowpass()); })
      .def_property_readonly("highpass",
                             [](const FilterBank& b) {
                               py::list out;
                               for (const auto& h : b.highpass()) out.append(taps_dict(h));
                               return out;
                             })
      .def("to_json", &io::dump_bank)
      .def_static("from_json", &io::parse_bank, py::arg("text"))
      .def(
          "verify", [](const FilterBank& b) { return report_dict(verify_tight_bank(b)); },
          "Exact check of the tight framelet identities.")
      .def("frequency_defect", &verify_frequency, py::arg("grid"))
      .def(
          "census",
          [](const FilterBank& b) {
            py::dict d;
            for (const auto& [dir, count] : direction_census(b).counts) d[to_tuple(dir.vector())] = count;
            return d;
          },
          "Direction vector -> number of two-tap high-pass filters.")
      .def("edges_csv", [](const FilterBank& b) { return edges_to_csv(edge_list(b)); })
      .def("__len__", [](const FilterBank& b) { return b.highpass().size(); })
      .def("__repr__", [](const FilterBank& b) {
        return "<Bank dim=" + std::to_string(b.dim()) + " highpass=" + std::to_string(b.highpass().size()) + ">";
      });

  m.def("haar_bank", [](std::size_t d) { return build_haar_bank(d); }, py::arg("dim"));

  m.def(
      "boxspline_bank",
      [](const IntArray& matrix, const std::string& mode, const std::string& reduce) {
        FilterBank bank = build_boxspline_bank(DirectionMatrix(to_matrix(matrix)), parse_bank_mode(mode));
        if (reduce == "pairs") return reduce_bank(bank, ReduceMode::EqualWeightPairs);
        if (reduce == "full") return reduce_bank(bank, ReduceMode::FullClass);
        if (reduce != "none") throw py::value_error("reduce must be 'none', 'pairs' or 'full'");
        return bank;
      },
      py::arg("matrix"), py::arg("mode") = "combined", py::arg("reduce") = "none");

  m.def(
      "validate_matrix",
      [](const IntArray& matrix) {
        const auto v = validate_direction_matrix(to_matrix(matrix));
        py::dict d;
        d["valid"] = v.valid();
        d["status"] = v.status == MatrixStatus::Valid           ? "valid"
                      : v.status == MatrixStatus::InvalidRank   ? "invalid_rank"
                                                                : "fails_odd_condition";
        d["rank"] = v.rank;
        d["witness"] = v.witness ? py::object(to_tuple(*v.witness)) : py::object(py::none());
        return d;
      },
      py::arg("matrix"));

  m.def(
      "boxspline_mask", [](const IntArray& matrix) { return taps_dict(boxspline_mask(DirectionMatrix(to_matrix(matrix)))); },
      py::arg("matrix"));

  m.def(
      "preimage_vertices",
      [](const IntArray& matrix, const std::vector<std::int64_t>& point) {
        py::list out;
        for (const auto& v : preimage_vertices(to_matrix(matrix), to_intvec(point))) out.append(to_tuple(v));
        return out;
      },
      py::arg("matrix"), py::arg("point"));

  m.def(
      "analyze", [](const FilterBank& b, const Array& u, std::size_t levels) {
        return pyramid_dict(analyze(b, to_tensor(u), levels));
      },
      py::arg("bank"), py::arg("data"), py::arg("levels") = 1);

  m.def(
      "synthesize",
      [](const FilterBank& b, const py::dict& pyramid, const std::vector<std::size_t>& shape) {
        return to_array(synthesize(b, pyramid_from(pyramid, shape)));
      },
      py::arg("bank"), py::arg("pyramid"), py::arg("shape"));

  m.def(
      "roundtrip_defects",
      [](const FilterBank& b, const Array& u, std::size_t levels) {
        const auto d = roundtrip_defects(b, to_tensor(u), levels);
        return py::make_tuple(d.reconstruction, d.parseval);
      },
      py::arg("bank"), py::arg("data"), py::arg("levels") = 1, "(reconstruction, parseval) relative defects.");

  m.def(
      "cascade_phi", [](const FilterBank& b, std::size_t level) { return grid_dict(cascade_phi(b.lowpass(), level)); },
      py::arg("bank"), py::arg("level"));

  m.def(
      "sample_psi",
      [](const FilterBank& b, std::size_t level) {
        py::list out;
        for (const auto& g : sample_psi(b, cascade_phi(b.lowpass(), level + 1), level)) out.append(grid_dict(g));
        return out;
      },
      py::arg("bank"), py::arg("level"));

  m.def(
      "boxspline_fourier",
      [](const IntArray& matrix, const std::vector<double>& xi) { return boxspline_fourier_eval(to_matrix(matrix), xi); },
      py::arg("matrix"), py::arg("xi"));
}
