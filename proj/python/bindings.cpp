#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "planchlab/bessel.hpp"
#include "planchlab/contour.hpp"
#include "planchlab/dpp.hpp"
#include "planchlab/errors.hpp"
#include "planchlab/kernels.hpp"
#include "planchlab/mc.hpp"
#include "planchlab/partition.hpp"
#include "planchlab/sampling.hpp"
#include "planchlab/stats.hpp"
#include "planchlab/variance.hpp"

namespace py = pybind11;
using namespace planch;

namespace {

py::int_ big_to_py(const BigInt& v) { return py::int_(py::str(v.str())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Plancherel diagrams, descent kernels and variance experiments";

  py::register_exception<Error>(m, "PlanchError");

  py::class_<Partition>(m, "Partition")
      .def(py::init<>())
      .def(py::init<std::vector<std::int64_t>>(), py::arg("parts"))
      .def_property_readonly("parts", &Partition::parts)
      .def_property_readonly("size", &Partition::size)
      .def_property_readonly("rows", &Partition::rows)
      .def("__len__", &Partition::rows)
      .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; })
      .def("__str__", &Partition::to_string)
      .def("__repr__", [](const Partition& p) { return "Partition('" + p.to_string() + "')"; })
      .def_static("parse", &Partition::parse, py::arg("text"));

  py::class_<DescentWindow>(m, "DescentWindow")
      .def_readonly("origin", &DescentWindow::origin)
      .def_property_readonly("bits",
                             [](const DescentWindow& w) {
                               return std::vector<int>(w.bits.begin(), w.bits.end());
                             })
      .def("at", &DescentWindow::at, py::arg("k"));

  m.def("make_partition", &make_partition, py::arg("parts"));
  m.def("enumerate_partitions", &enumerate_partitions, py::arg("n"), py::arg("cap") = 40);
  m.def("dimension", [](const Partition& p) { return big_to_py(dimension(p)); }, py::arg("lam"));
  m.def(
      "plancherel_prob",
      [](const Partition& p) {
        const auto e = plancherel_prob(p);
        return py::make_tuple(big_to_py(e.numerator), big_to_py(e.denominator));
      },
      py::arg("lam"), "Exact probability as a (numerator, denominator) pair");
  m.def("poissonized_prob", &poissonized_prob, py::arg("lam"), py::arg("eta"));
  m.def("descent", &descent, py::arg("lam"), py::arg("k"));
  m.def("descent_window", &descent_window, py::arg("lam"), py::arg("a"), py::arg("b"));
  m.def("profile_phi", &profile_phi, py::arg("lam"), py::arg("t"));
  m.def("omega", &omega, py::arg("t"));
  m.def("deviation_F", &deviation_F, py::arg("lam"), py::arg("t"), py::arg("n"));

  m.def(
      "rsk_shape",
      [](const std::vector<std::int64_t>& seq) {
        return rsk_shape(std::span<const std::int64_t>(seq.data(), seq.size()));
      },
      py::arg("sequence"));
  m.def(
      "sample_plancherel",
      [](std::int64_t n, std::uint64_t seed, std::uint64_t index) {
        RngStream rng(RngSeed{seed}, index);
        return sample_plancherel(n, rng);
      },
      py::arg("n"), py::arg("seed"), py::arg("index") = 0);

  m.def("edge_cutoff", &edge_cutoff, py::arg("theta"));
  py::class_<BesselTable, std::shared_ptr<BesselTable>>(m, "BesselTable")
      .def(py::init<double, std::int64_t>(), py::arg("two_theta"), py::arg("max_order"))
      .def_property_readonly("two_theta", &BesselTable::two_theta)
      .def_property_readonly("max_order", &BesselTable::max_order)
      .def("at", &BesselTable::at, py::arg("m"))
      .def("sq_tail", &BesselTable::sq_tail, py::arg("x"));
  m.def("bessel_row", &bessel_row, py::arg("two_theta"), py::arg("max_order"));
  m.def("sine_kernel", &sine_kernel, py::arg("d"), py::arg("phi"));
  m.def("bessel_kernel", &bessel_kernel, py::arg("x"), py::arg("y"), py::arg("theta"),
        py::arg("table"));

  py::class_<KernelSpec>(m, "KernelSpec")
      .def_static("sine", &KernelSpec::sine, py::arg("phi"))
      .def_static("bessel", py::overload_cast<double>(&KernelSpec::bessel), py::arg("theta"))
      .def("__call__", &KernelSpec::operator(), py::arg("x"), py::arg("y"))
      .def_property_readonly("is_sine", &KernelSpec::is_sine)
      .def("u", &KernelSpec::u, py::arg("x"))
      .def("phi_at", &KernelSpec::phi_at, py::arg("x"));

  m.def(
      "correlation",
      [](const std::vector<std::int64_t>& pts, const KernelSpec& k) {
        return correlation(std::span<const std::int64_t>(pts.data(), pts.size()), k);
      },
      py::arg("points"), py::arg("kernel"));

  py::class_<ContourGrid>(m, "ContourGrid")
      .def(py::init([](double r, double R, std::int64_t nodes) {
             return ContourGrid{r, R, nodes};
           }),
           py::arg("inner_radius") = 0.5, py::arg("outer_radius") = 2.0, py::arg("node_count") = 256)
      .def_readwrite("inner_radius", &ContourGrid::inner_radius)
      .def_readwrite("outer_radius", &ContourGrid::outer_radius)
      .def_readwrite("node_count", &ContourGrid::node_count);
  m.def("contour_kernel_oracle", &contour_kernel_oracle, py::arg("x"), py::arg("y"),
        py::arg("theta"), py::arg("grid") = ContourGrid{});

  py::class_<PatternSpec>(m, "PatternSpec")
      .def(py::init<std::vector<std::int64_t>>(), py::arg("offsets"))
      .def_property_readonly("offsets", &PatternSpec::offsets)
      .def("__str__", &PatternSpec::to_string)
      .def_static("parse", &PatternSpec::parse, py::arg("text"));

  py::class_<VarianceBreakdown>(m, "VarianceBreakdown")
      .def_readonly("a", &VarianceBreakdown::a)
      .def_readonly("b", &VarianceBreakdown::b)
      .def_readonly("theta", &VarianceBreakdown::theta)
      .def_readonly("value_inside_outside", &VarianceBreakdown::value_inside_outside)
      .def_readonly("value_trace_form", &VarianceBreakdown::value_trace_form)
      .def_readonly("truncation_bound", &VarianceBreakdown::truncation_bound);
  m.def(
      "poissonized_variance",
      [](std::int64_t a, std::int64_t b, double theta, int threads) {
        return poissonized_variance(a, b, theta, nullptr, threads);
      },
      py::arg("a"), py::arg("b"), py::arg("theta"), py::arg("threads") = 0);
  m.def("predicted_log_variance", &predicted_log_variance, py::arg("length"));
  m.def("pattern_expectation", &pattern_expectation, py::arg("pattern"), py::arg("phi"));
  m.def("pattern_covariance",
        py::overload_cast<const PatternSpec&, std::int64_t, double>(&pattern_covariance),
        py::arg("pattern"), py::arg("d"), py::arg("phi"));
  m.def("pattern_covariance",
        py::overload_cast<const PatternSpec&, const PatternSpec&, std::int64_t, double>(
            &pattern_covariance),
        py::arg("a"), py::arg("b"), py::arg("d"), py::arg("phi"));
  m.def(
      "pattern_variance_density",
      [](const PatternSpec& p, double phi, std::int64_t tail) {
        const auto d = pattern_variance_density(p, phi, tail);
        return py::make_tuple(d.value, d.tail_bound);
      },
      py::arg("pattern"), py::arg("phi"), py::arg("tail") = 1000000);
  m.def(
      "pattern_variance_density",
      [](const PatternSpec& a, const PatternSpec& b, double phi, std::int64_t tail) {
        const auto d = pattern_variance_density(a, b, phi, tail);
        return py::make_tuple(d.value, d.tail_bound);
      },
      py::arg("a"), py::arg("b"), py::arg("phi"), py::arg("tail") = 1000000);
  m.def("pattern_window_variance", &pattern_window_variance, py::arg("pattern"), py::arg("length"),
        py::arg("phi"));
  m.def("difference_window_variance", &difference_window_variance, py::arg("a"), py::arg("b"),
        py::arg("length"), py::arg("phi"));

  py::class_<DppWindowSampler>(m, "DppWindowSampler")
      .def(py::init<const KernelSpec&, std::int64_t, std::int64_t>(), py::arg("kernel"),
           py::arg("a"), py::arg("b"))
      .def(
          "sample",
          [](const DppWindowSampler& s, std::uint64_t seed, std::uint64_t index) {
            RngStream rng(RngSeed{seed}, index);
            return s.sample(rng);
          },
          py::arg("seed"), py::arg("index") = 0)
      .def_property_readonly("mean_points", &DppWindowSampler::mean_points);
  m.def(
      "dpp_window_sample",
      [](const KernelSpec& k, std::int64_t a, std::int64_t b, std::uint64_t seed) {
        return dpp_window_sample(k, a, b, RngSeed{seed});
      },
      py::arg("kernel"), py::arg("a"), py::arg("b"), py::arg("seed"));

  py::class_<McReport>(m, "McReport")
      .def_readonly("n_samples", &McReport::n_samples)
      .def_readonly("seed", &McReport::seed)
      .def_readonly("mean", &McReport::mean)
      .def_readonly("variance", &McReport::variance)
      .def_readonly("std_error_of_variance", &McReport::std_error_of_variance)
      .def_readonly("skewness", &McReport::skewness)
      .def_readonly("excess_kurtosis", &McReport::excess_kurtosis);
  m.def(
      "mc_linear_statistic",
      [](std::int64_t n, std::int64_t a, std::int64_t b, const PatternSpec& pattern,
         std::int64_t samples, std::uint64_t seed, int threads) {
        return mc_linear_statistic(n, a, b, pattern, samples, RngSeed{seed}, threads);
      },
      py::arg("n"), py::arg("a"), py::arg("b"), py::arg("pattern"), py::arg("samples"),
      py::arg("seed"), py::arg("threads") = 0);

  py::class_<MomentSummary>(m, "MomentSummary")
      .def_readonly("n_samples", &MomentSummary::n_samples)
      .def_readonly("mean", &MomentSummary::mean)
      .def_readonly("variance", &MomentSummary::variance)
      .def_readonly("skewness", &MomentSummary::skewness)
      .def_readonly("excess_kurtosis", &MomentSummary::excess_kurtosis);
  m.def(
      "summarize",
      [](const std::vector<double>& v) {
        return summarize(std::span<const double>(v.data(), v.size()));
      },
      py::arg("samples"));
  m.def(
      "ks_normal",
      [](const std::vector<double>& v) {
        return ks_normal(std::span<const double>(v.data(), v.size()));
      },
      py::arg("samples"));
  m.def(
      "fit_log_slope",
      [](const std::vector<std::int64_t>& lengths, const std::vector<double>& vars) {
        return fit_log_slope(std::span<const std::int64_t>(lengths.data(), lengths.size()),
                             std::span<const double>(vars.data(), vars.size()));
      },
      py::arg("lengths"), py::arg("variances"));
}
