#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "burnside/analysis.hpp"
#include "burnside/combinatorics.hpp"
#include "burnside/kernel.hpp"
#include "burnside/oracle.hpp"
#include "burnside/simulate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace burnside;

namespace {

std::vector<std::vector<std::string>> matrix_fractions(const KernelMatrix& m) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(m.size());
    for (const auto& row : m.entries) {
        std::vector<std::string> out;
        out.reserve(row.size());
        for (const auto& e : row) out.push_back(to_fraction_string(e));
        rows.push_back(std::move(out));
    }
    return rows;
}

std::vector<std::vector<double>> matrix_floats(const KernelMatrix& m) {
    std::vector<std::vector<double>> rows;
    rows.reserve(m.size());
    for (const auto& row : m.entries) {
        std::vector<double> out;
        out.reserve(row.size());
        for (const auto& e : row) out.push_back(e.convert_to<double>());
        rows.push_back(std::move(out));
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_burnside, m) {
    m.doc() = "Burnside process on [k]^n: exact kernels, samplers, and mixing bounds";

    m.def("bell", [](int n) { return bell(n).str(); }, py::arg("n"));
    m.def("stirling2", [](int n, int j) { return stirling2(n, j).str(); },
          py::arg("n"), py::arg("j"));
    m.def("subfactorial", [](int k) { return subfactorial(k).str(); }, py::arg("k"));
    m.def("fixed_point_moment",
          [](int n, int k, int j) { return to_fraction_string(fixed_point_moment(n, k, j)); },
          py::arg("n"), py::arg("k"), py::arg("j"));

    m.def("lumped_transition",
          [](int n, int k, int jx, int jy) {
              return to_fraction_string(lumped_transition(n, k, jx, jy));
          },
          py::arg("n"), py::arg("k"), py::arg("j_x"), py::arg("j_y"));
    m.def("lumped_matrix",
          [](int n, int k, bool exact) {
              auto mat = lumped_matrix(n, k);
              return exact ? py::cast(matrix_fractions(mat)) : py::cast(matrix_floats(mat));
          },
          py::arg("n"), py::arg("k"), py::arg("exact") = true);
    m.def("block_count_matrix",
          [](int n, int k, bool exact) {
              auto mat = block_count_matrix(n, k);
              return exact ? py::cast(matrix_fractions(mat)) : py::cast(matrix_floats(mat));
          },
          py::arg("n"), py::arg("k"), py::arg("exact") = true);
    m.def("stationary_lumped",
          [](int n, int k) { return to_fraction_string(stationary_lumped(n, k)); },
          py::arg("n"), py::arg("k"));

    m.def("eigenvalues",
          [](int n, int k) { return spectrum(n, k).eigenvalues; }, py::arg("n"), py::arg("k"));
    m.def("spectral_report",
          [](int n, int k) { return spectral_report_json(spectrum(n, k)); },
          py::arg("n"), py::arg("k"));
    m.def("tv_curve",
          [](int n, int k, int t_max) {
              auto curve = distance_curve(n, k, t_max);
              std::vector<double> d;
              d.reserve(curve.d_values.size());
              for (const auto& v : curve.d_values) d.push_back(v.convert_to<double>());
              return py::make_tuple(curve.t_values, d, curve.bound_values);
          },
          py::arg("n"), py::arg("k"), py::arg("t_max"));
    m.def("mixing_time",
          [](int n, int k, double eps, int t_max) -> std::optional<int> {
              return mixing_time(distance_curve(n, k, t_max), eps);
          },
          py::arg("n"), py::arg("k"), py::arg("eps") = 0.25, py::arg("t_max") = 200);
    m.def("minorization",
          [](int n, int k) { return minorization_report_json(minorization_report(n, k)); },
          py::arg("n"), py::arg("k"));

    m.def("sample_partition",
          [](int n, int k, int steps, std::uint64_t seed) {
              RngStream rng(seed);
              int T = steps > 0 ? steps : default_steps(n, k, 0.01);
              return sample_partition(n, k, T, rng).rgs;
          },
          py::arg("n"), py::arg("k"), py::arg("steps") = 0, py::arg("seed") = 0);
    m.def("stam_sample",
          [](int n, std::uint64_t seed) {
              RngStream rng(seed);
              auto draw = stam_sample(n, rng);
              return py::make_tuple(draw.partition.rgs, draw.urn_count, draw.empty_urns);
          },
          py::arg("n"), py::arg("seed") = 0);

    m.attr("__version__") = "1.0.0";
}
