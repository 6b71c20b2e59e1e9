#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ddsim/classify.hpp"
#include "ddsim/construct.hpp"
#include "ddsim/errors.hpp"
#include "ddsim/io.hpp"
#include "ddsim/oracle.hpp"
#include "ddsim/special.hpp"
#include "ddsim/spectral.hpp"

namespace py = pybind11;
using namespace ddsim;

namespace {

// Results go out with the same field names as the CLI JSON.
py::object to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(to_py(v));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_py(v);
      return out;
    }
    default: throw std::runtime_error("unsupported JSON value");
  }
}

RealMatrix mat(const Eigen::MatrixXd& a) { return RealMatrix(a); }

Axis axis_of(const std::string& s) {
  if (s == "row") return Axis::Row;
  if (s == "column") return Axis::Column;
  throw PreconditionViolated("axis must be 'row' or 'column'");
}

Target target_of(const std::string& s) {
  if (s == "strict") return Target::Strict;
  if (s == "nonstrict") return Target::NonStrict;
  throw PreconditionViolated("target must be 'strict' or 'nonstrict'");
}

}  // namespace

PYBIND11_MODULE(_ddsim, m) {
  m.doc() = "Similarity to diagonally dominant matrices";

  auto base = py::register_exception<Error>(m, "DdsimError", PyExc_RuntimeError);
  py::register_exception<InvalidMatrix>(m, "InvalidMatrix", base);
  py::register_exception<SingularTransform>(m, "SingularTransform", base);
  py::register_exception<IllConditionedJordan>(m, "IllConditionedJordan", base);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base);
  py::register_exception<NotAchievable>(m, "NotAchievable", base);
  py::register_exception<PreconditionViolated>(m, "PreconditionViolated", base);
  py::register_exception<NumericallySingular>(m, "NumericallySingular", base);
  py::register_exception<SingularInput>(m, "SingularInput", base);
  py::register_exception<ClusterAmbiguity>(m, "ClusterAmbiguity", base);
  py::register_exception<ParseError>(m, "ParseError", base);

  m.def("is_diag_dominant",
        [](const Eigen::MatrixXd& a, const std::string& axis, bool strict, double tol) {
          return to_py(io::to_json(is_diag_dominant(mat(a), axis_of(axis), strict, tol)));
        },
        py::arg("a"), py::arg("axis") = "row", py::arg("strict") = true, py::arg("tol") = 0.0);
  m.def("comparison_matrix", [](const Eigen::MatrixXd& a) { return comparison_matrix(mat(a)).eigen(); });
  m.def("gershgorin_discs",
        [](const Eigen::MatrixXd& a, const std::string& axis) {
          return to_py(io::to_json(gershgorin_discs(mat(a), axis_of(axis))));
        },
        py::arg("a"), py::arg("axis") = "row");
  m.def("similarity_residual",
        [](const Eigen::MatrixXd& a, const Eigen::MatrixXd& p, const Eigen::MatrixXd& b) {
          return similarity_residual(mat(a), mat(p), mat(b));
        });

  m.def("eigen_structure",
        [](const Eigen::MatrixXd& a, double cluster_tol) {
          return to_py(io::to_json(eigen_structure(mat(a), cluster_tol)));
        },
        py::arg("a"), py::arg("cluster_tol") = kDefaultClusterTol);
  m.def("real_jordan_form",
        [](const Eigen::MatrixXd& a, double cluster_tol) {
          return to_py(io::to_json(real_jordan_form(mat(a), cluster_tol)));
        },
        py::arg("a"), py::arg("cluster_tol") = kDefaultClusterTol);

  m.def("classify",
        [](const Eigen::MatrixXd& a, double tol, double cluster_tol) {
          return to_py(io::to_json(classify(mat(a), tol, cluster_tol)));
        },
        py::arg("a"), py::arg("tol") = kDefaultClassifyTol, py::arg("cluster_tol") = kDefaultClusterTol);
  m.def("classify_2x2",
        [](const Eigen::MatrixXd& a, double tol) { return to_py(io::to_json(classify_2x2(mat(a), tol))); },
        py::arg("a"), py::arg("tol") = kDefaultClassifyTol);
  m.def("params_to_matrix", [](double alpha, double beta, double x, double y) {
    return params_to_matrix({alpha, beta, x, y}).eigen();
  });
  m.def("lemma3_feasible", &lemma3_feasible);
  m.def("lemma3_strict_feasible", &lemma3_strict_feasible);

  m.def("build_real_dd_transform",
        [](const Eigen::MatrixXd& a, const std::string& target, double tol, double margin) {
          return to_py(io::to_json(build_real_dd_transform(mat(a), target_of(target), tol, margin)));
        },
        py::arg("a"), py::arg("target") = "strict", py::arg("tol") = kDefaultClassifyTol,
        py::arg("margin") = kDefaultMargin);
  m.def("build_complex_dd_transform",
        [](const Eigen::MatrixXd& a, double tol, double margin) {
          return to_py(io::to_json(build_complex_dd_transform(mat(a), tol, margin)));
        },
        py::arg("a"), py::arg("tol") = kDefaultClassifyTol, py::arg("margin") = kDefaultMargin);

  m.def("is_z_matrix", [](const Eigen::MatrixXd& a) { return is_z_matrix(mat(a)); });
  m.def("is_metzler", [](const Eigen::MatrixXd& a) { return is_metzler(mat(a)); });
  m.def("is_hurwitz", [](const Eigen::MatrixXd& a, double tol) { return is_hurwitz(mat(a), tol); },
        py::arg("a"), py::arg("tol") = kDefaultHurwitzTol);
  m.def("is_m_matrix", [](const Eigen::MatrixXd& a, double tol) { return is_m_matrix(mat(a), tol); },
        py::arg("a"), py::arg("tol") = kDefaultHurwitzTol);
  m.def("is_h_matrix", [](const Eigen::MatrixXd& a, double tol) { return is_h_matrix(mat(a), tol); },
        py::arg("a"), py::arg("tol") = kDefaultHurwitzTol);
  m.def("metzler_hurwitz_scaling",
        [](const Eigen::MatrixXd& a, double tol) { return to_py(io::to_json(metzler_hurwitz_scaling(mat(a), tol))); },
        py::arg("a"), py::arg("tol") = kDefaultHurwitzTol);
  m.def("h_matrix_scaling",
        [](const Eigen::MatrixXd& a, double tol) { return to_py(io::to_json(h_matrix_scaling(mat(a), tol))); },
        py::arg("a"), py::arg("tol") = kDefaultHurwitzTol);

  m.def("grid_search_2x2",
        [](double alpha, double beta, std::pair<double, double> x, std::pair<double, double> y, int steps,
           bool strict) {
          const auto r = grid_search_2x2(alpha, beta, {x.first, x.second}, {y.first, y.second}, steps, strict);
          py::dict out;
          out["found"] = r.found;
          out["best_margin"] = r.best_margin;
          out["samples"] = r.samples;
          out["witness"] = r.witness ? py::object(py::make_tuple(r.witness->x, r.witness->y)) : py::none();
          return out;
        },
        py::arg("alpha"), py::arg("beta"), py::arg("x_range"), py::arg("abs_y_range"), py::arg("steps"),
        py::arg("strict") = true);
  m.def("random_similarity_search",
        [](const Eigen::MatrixXd& a, long trials, std::uint64_t seed, bool strict) {
          return to_py(io::to_json(random_similarity_search(mat(a), trials, seed, strict)));
        },
        py::arg("a"), py::arg("trials"), py::arg("seed") = 0, py::arg("strict") = false);

  m.def("gershgorin_svg",
        [](const Eigen::MatrixXd& a, const std::string& axis) {
          return io::render_gershgorin_svg(mat(a), axis_of(axis));
        },
        py::arg("a"), py::arg("axis") = "row");
}
