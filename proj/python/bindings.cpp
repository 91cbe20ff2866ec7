#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "lmhd/config.hpp"
#include "lmhd/errors.hpp"
#include "lmhd/experiment.hpp"
#include "lmhd/initial_conditions.hpp"
#include "lmhd/osgood.hpp"
#include "lmhd/series_io.hpp"
#include "lmhd/spectral.hpp"

namespace py = pybind11;
using namespace lmhd;

namespace {

py::array_t<double> series_array(const DiagnosticSeries& series) {
  const auto cols = record_field_names().size();
  py::array_t<double> out({series.size(), cols});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto values = record_values(series[i]);
    for (std::size_t c = 0; c < cols; ++c) view(i, c) = values[c];
  }
  return out;
}

DiagnosticSeries series_from_array(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2 || static_cast<std::size_t>(a.shape(1)) != record_field_names().size()) {
    throw InvalidArgument("series array must have shape (n, " + std::to_string(record_field_names().size()) + ")");
  }
  DiagnosticSeries series;
  auto view = a.unchecked<2>();
  for (py::ssize_t i = 0; i < a.shape(0); ++i) {
    std::vector<double> row(static_cast<std::size_t>(a.shape(1)));
    for (py::ssize_t c = 0; c < a.shape(1); ++c) row[static_cast<std::size_t>(c)] = view(i, c);
    series.push_back(record_from_values(row));
  }
  return series;
}

py::dict result_dict(const ExperimentResult& r) {
  py::dict d;
  d["status"] = to_string(r.status);
  d["exit_code"] = exit_code(r.status);
  d["message"] = r.message;
  d["steps"] = r.steps;
  d["series"] = series_array(r.series);
  d["summary_json"] = r.summary.dump();
  return d;
}

std::vector<std::size_t> shape_of(const Grid& grid) {
  return std::vector<std::size_t>(static_cast<std::size_t>(grid.dim()), static_cast<std::size_t>(grid.points()));
}

py::array_t<double> physical(const VectorField& v) {
  const Grid& grid = v.grid();
  auto shape = shape_of(grid);
  shape.insert(shape.begin(), static_cast<std::size_t>(v.dim()));
  py::array_t<double> out(shape);
  double* data = out.mutable_data();
  for (int a = 0; a < v.dim(); ++a) {
    const auto x = to_physical(v[a]);
    std::copy(x.begin(), x.end(), data + static_cast<std::size_t>(a) * grid.size());
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectral solver for magnetohydrodynamics with logarithmically weakened dissipation";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

  m.def("record_field_names", &record_field_names);

  m.def(
      "run_config_text",
      [](const std::string& text) {
        RunConfig config;
        try {
          config = build_config(parse_config_text(text));
        } catch (const ConfigError& e) {
          ExperimentResult r;
          r.status = RunStatus::config_error;
          r.message = e.what();
          return result_dict(r);
        }
        py::gil_scoped_release release;
        auto r = run_experiment(config);
        py::gil_scoped_acquire acquire;
        return result_dict(r);
      },
      py::arg("text"), "Runs an experiment from config text; output paths in the text are honoured.");

  m.def(
      "run_config_file",
      [](const std::filesystem::path& path) {
        ExperimentResult r;
        {
          py::gil_scoped_release release;
          r = run_experiment(path);
        }
        return result_dict(r);
      },
      py::arg("path"));

  m.def(
      "check_series",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>& series, const std::string& config_text,
         int dim) {
        const auto config = build_config(parse_config_text(config_text));
        return check_series(series_from_array(series), config.params, dim).dump();
      },
      py::arg("series"), py::arg("config_text") = "", py::arg("dim") = 2);

  m.def(
      "read_series",
      [](const std::filesystem::path& path) { return series_array(read_series_csv(path)); }, py::arg("path"));

  m.def(
      "initial_condition",
      [](const std::string& name, const std::map<std::string, std::string>& params, int dim, int points) {
        const Grid grid(dim, points);
        const auto s = initial_condition(name, params, grid);
        return py::make_tuple(physical(s.u), physical(s.b));
      },
      py::arg("name"), py::arg("params") = std::map<std::string, std::string>{}, py::arg("dim") = 2,
      py::arg("points") = 64, "Physical samples (u, b), each of shape (dim, points, ..., points).");

  m.def(
      "g_value",
      [](const std::string& name, const std::map<std::string, double>& params, double radius) {
        return GFunction::from_catalog(name, params)(radius);
      },
      py::arg("name"), py::arg("params") = std::map<std::string, double>{}, py::arg("radius"));

  m.def(
      "osgood",
      [](const std::string& name, const std::map<std::string, double>& params, const std::string& limit) {
        const auto g = GFunction::from_catalog(name, params);
        const auto v = osgood_classify(g, limit.empty() ? default_osgood_limit() : OsgoodLimit::parse(limit));
        py::dict d;
        d["classification"] = to_string(v.classification);
        d["partial_integral"] = v.partial_integral;
        d["log_upper_limit"] = v.log_upper_limit_used;
        d["window_integrals"] = v.window_integrals;
        d["tail_ratios"] = v.tail_ratios;
        return d;
      },
      py::arg("name"), py::arg("params") = std::map<std::string, double>{}, py::arg("limit") = "");
}
