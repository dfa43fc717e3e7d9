#include "capca/analytic.hpp"
#include "capca/errors.hpp"
#include "capca/estimators.hpp"
#include "capca/harness.hpp"
#include "capca/pointcloud.hpp"
#include "capca/samplers.hpp"
#include "capca/spectral.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace capca;

namespace {

EstimatorId estimator_arg(const std::string& name) { return parse_estimator(name); }

LbDenominator denominator_arg(bool corrected) {
  return corrected ? LbDenominator::Corrected : LbDenominator::Original;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Curvature-adjusted local PCA intrinsic dimension estimation";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  const py::tuple value_error = py::make_tuple(error, py::handle(PyExc_ValueError));
  py::register_exception<InvalidArgument>(m, "InvalidArgument", value_error);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<IoError>(m, "IoError", error.ptr());
  py::register_exception<DegenerateNeighborhood>(m, "DegenerateNeighborhood", error.ptr());
  py::register_exception<ResampleLimitExceeded>(m, "ResampleLimitExceeded", error.ptr());

  py::class_<PointCloud>(m, "PointCloud")
      .def(py::init<RowMatrix, std::string>(), py::arg("points"), py::arg("label") = "")
      .def_property_readonly("size", &PointCloud::size)
      .def_property_readonly("dim", &PointCloud::dim)
      .def_property_readonly("points", &PointCloud::points)
      .def_property_readonly("label", &PointCloud::label)
      .def("__len__", &PointCloud::size);

  m.def(
      "load_csv", [](const std::filesystem::path& path, bool header) { return load_csv(path, {header}); },
      py::arg("path"), py::arg("header") = false);
  m.def("save_csv", &save_csv, py::arg("cloud"), py::arg("path"));

  py::class_<Neighborhood>(m, "Neighborhood")
      .def_readonly("center", &Neighborhood::center)
      .def_readonly("indices", &Neighborhood::indices)
      .def_readonly("distances", &Neighborhood::distances)
      .def_readonly("r", &Neighborhood::r)
      .def_property_readonly("k", &Neighborhood::k)
      .def("prefix", &Neighborhood::prefix, py::arg("k"));
  m.def("knn", &knn, py::arg("cloud"), py::arg("center"), py::arg("k"));

  py::class_<EigenSpectrum>(m, "EigenSpectrum")
      .def(py::init([](std::vector<double> values) {
             EigenSpectrum s;
             s.values = std::move(values);
             return s;
           }),
           py::arg("values"))
      .def_readonly("values", &EigenSpectrum::values)
      .def_readonly("r", &EigenSpectrum::r)
      .def_readonly("k", &EigenSpectrum::k)
      .def_readonly("truncated", &EigenSpectrum::truncated);
  m.def("local_spectrum", &local_spectrum, py::arg("cloud"), py::arg("neighborhood"), py::arg("truncate") = false);

  m.def("reference_spectrum", [](int d, int ambient) { return reference_spectrum(d, ambient).values; },
        py::arg("d"), py::arg("ambient"));
  m.def(
      "curvature_coefficients",
      [](int d) {
        const auto c = curvature_coefficients(d);
        return py::make_tuple(c.high, c.low, c.ratio);
      },
      py::arg("d"));
  m.def("capca_objective", &capca_objective, py::arg("spectrum"), py::arg("d"));
  m.def("pca_misfit", &pca_misfit, py::arg("spectrum"), py::arg("d"));
  m.def("capca_estimate", &capca_estimate, py::arg("spectrum"));
  m.def("pca_estimate", &pca_estimate, py::arg("spectrum"));
  m.def(
      "lb_estimate",
      [](const std::vector<double>& distances, bool corrected) {
        return lb_estimate(distances, denominator_arg(corrected));
      },
      py::arg("distances"), py::arg("corrected") = false);
  m.def(
      "estimate_at_point",
      [](const PointCloud& cloud, Index index, Index k, const std::string& estimator, bool truncate,
         bool corrected) {
        return estimate_at_point(cloud, index, k, estimator_arg(estimator), {truncate, denominator_arg(corrected)});
      },
      py::arg("cloud"), py::arg("index"), py::arg("k"), py::arg("estimator") = "capca", py::arg("truncate") = false,
      py::arg("lb_corrected") = false);

  m.def(
      "sample",
      [](const std::string& kind, Index n, std::uint64_t seed, double a, double b, int dim, int max_freq,
         std::vector<double> edges, int width, int height, double noise) {
        ManifoldParams p;
        p.a = a;
        p.b = b;
        p.dim = dim;
        p.max_freq = max_freq;
        p.edges = std::move(edges);
        p.width = width;
        p.height = height;
        return add_noise(sample(make_manifold(kind, p), n, seed), noise, seed);
      },
      py::arg("kind"), py::arg("n"), py::arg("seed") = 0, py::arg("a") = 10.0, py::arg("b") = 5.0, py::arg("dim") = 2,
      py::arg("max_freq") = 4, py::arg("edges") = std::vector<double>{1.0, 1.0, 1.0}, py::arg("width") = 64,
      py::arg("height") = 64, py::arg("noise") = 0.0);

  py::class_<SweepRow>(m, "SweepRow")
      .def_property_readonly("estimator", [](const SweepRow& r) { return std::string(to_string(r.estimator)); })
      .def_readonly("k", &SweepRow::k)
      .def_readonly("mean", &SweepRow::mean)
      .def_readonly("std", &SweepRow::std)
      .def_readonly("skipped", &SweepRow::skipped)
      .def_readonly("values", &SweepRow::values);
  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("rows", &SweepResult::rows)
      .def_readonly("centers", &SweepResult::centers)
      .def_readonly("replacements", &SweepResult::replacements)
      .def("csv", [](const SweepResult& r) { return format_csv(r); })
      .def("svg", [](const SweepResult& r, std::optional<int> d) { return render_svg(r, d); },
           py::arg("true_dim") = py::none());
  m.def(
      "run_sweep",
      [](const PointCloud& cloud, const std::vector<std::string>& estimators, Index k_min, Index k_max, Index k_step,
         Index centers, std::uint64_t seed, bool truncate, Index resample_limit, unsigned threads, bool corrected) {
        SweepConfig cfg;
        cfg.estimators.clear();
        for (const auto& name : estimators) cfg.estimators.push_back(estimator_arg(name));
        cfg.k_min = k_min;
        cfg.k_max = k_max;
        cfg.k_step = k_step;
        cfg.centers = centers;
        cfg.seed = seed;
        cfg.truncate_tail = truncate;
        cfg.resample_limit = resample_limit;
        cfg.threads = threads;
        cfg.lb_denominator = denominator_arg(corrected);
        py::gil_scoped_release release;
        return run_sweep(cloud, cfg);
      },
      py::arg("cloud"), py::arg("estimators") = std::vector<std::string>{"pca", "capca", "lb"}, py::arg("k_min"),
      py::arg("k_max"), py::arg("k_step") = 1, py::arg("centers") = 200, py::arg("seed") = 0,
      py::arg("truncate") = false, py::arg("resample_limit") = -1, py::arg("threads") = 1,
      py::arg("lb_corrected") = false);

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed, std::size_t samples, unsigned threads) {
        VerifyReport report;
        {
          py::gil_scoped_release release;
          report = verify_suite(suite, seed, {samples, threads});
        }
        return py::make_tuple(report.passed(), report.format());
      },
      py::arg("suite"), py::arg("seed") = 0, py::arg("samples") = 1'000'000, py::arg("threads") = 1);

  auto an = m.def_submodule("analytic", "Closed forms for quadratic embeddings");
  py::class_<analytic::QuadraticEmbedding>(an, "QuadraticEmbedding")
      .def(py::init<std::vector<Eigen::MatrixXd>>(), py::arg("forms"))
      .def_property_readonly("intrinsic_dim", &analytic::QuadraticEmbedding::intrinsic_dim)
      .def_property_readonly("ambient_dim", &analytic::QuadraticEmbedding::ambient_dim)
      .def_property_readonly("max_norm", &analytic::QuadraticEmbedding::max_norm)
      .def_property_readonly("a", py::overload_cast<>(&analytic::QuadraticEmbedding::a, py::const_))
      .def_property_readonly("b", py::overload_cast<>(&analytic::QuadraticEmbedding::b, py::const_));
  an.def("sphere_moment", [](const std::vector<int>& alpha) { return analytic::sphere_moment(alpha); },
         py::arg("exponents"));
  an.def("trace_sigma1", &analytic::trace_sigma1, py::arg("d"), py::arg("a"), py::arg("b"));
  an.def("trace_sigma2", &analytic::trace_sigma2, py::arg("d"), py::arg("a"));
  an.def("curvature_from_tail", &analytic::curvature_from_tail, py::arg("d"), py::arg("tail_trace"));
  an.def(
      "eigenvalue_bounds",
      [](int d, double a, double b) {
        const auto bounds = analytic::eigenvalue_bounds(d, a, b);
        return py::make_tuple(bounds.low, bounds.high);
      },
      py::arg("d"), py::arg("a"), py::arg("b"));
  an.def("surface_area", &analytic::surface_area, py::arg("embedding"));
  an.def(
      "mc_covariance",
      [](const analytic::QuadraticEmbedding& emb, std::size_t n, std::uint64_t seed, unsigned threads) {
        analytic::McCovariance mc;
        {
          py::gil_scoped_release release;
          mc = analytic::mc_covariance(emb, n, seed, {threads});
        }
        py::dict out;
        out["covariance"] = mc.covariance;
        out["entry_stderr"] = mc.entry_stderr;
        out["upper_spectrum"] = mc.upper_spectrum;
        out["upper_trace"] = mc.upper_trace;
        out["lower_trace"] = mc.lower_trace;
        out["upper_trace_stderr"] = mc.upper_trace_stderr;
        out["lower_trace_stderr"] = mc.lower_trace_stderr;
        out["acceptance_rate"] = mc.acceptance_rate();
        return out;
      },
      py::arg("embedding"), py::arg("n"), py::arg("seed") = 0, py::arg("threads") = 1);
}
