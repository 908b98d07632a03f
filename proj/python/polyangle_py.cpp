#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>

#include "polyangle/cli.hpp"
#include "polyangle/generators.hpp"
#include "polyangle/identities.hpp"
#include "polyangle/polytope_io.hpp"
#include "polyangle/projection.hpp"
#include "polyangle/solid_angle.hpp"

namespace py = pybind11;
using namespace polyangle;

namespace {

McOptions mc_options(std::uint64_t samples, std::uint64_t seed, unsigned workers) {
  return {samples, seed, workers};
}

AngleOptions angle_options(const std::string& method, std::uint64_t samples, std::uint64_t seed,
                           unsigned workers) {
  static const std::map<std::string, MethodChoice> methods{
      {"auto", MethodChoice::Auto}, {"exact", MethodChoice::Exact}, {"mc", MethodChoice::MonteCarlo}};
  const auto it = methods.find(method);
  if (it == methods.end()) throw py::value_error("method must be auto, exact or mc");
  return {it->second, mc_options(samples, seed, workers)};
}

const Face& face_at(const ConvexPolytope& p, std::vector<int> vertex_ids) {
  const auto index = p.find_face(std::move(vertex_ids));
  if (!index) throw py::key_error("no face with these vertices");
  return p.faces()[*index];
}

}  // namespace

PYBIND11_MODULE(polyangle, m) {
  m.doc() = "Solid angles of convex polytopes as projection probabilities";

  py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("unit_ball_volume", &unit_ball_volume, py::arg("n"));
  m.def("unit_sphere_area", &unit_sphere_area, py::arg("n"));

  py::class_<Face>(m, "Face")
      .def_readonly("dim", &Face::dim)
      .def_readonly("vertex_ids", &Face::vertex_ids)
      .def_readonly("centroid", &Face::centroid)
      .def("__repr__", [](const Face& f) {
        std::ostringstream s;
        s << "Face(dim=" << f.dim << ", vertices=" << f.vertex_ids.size() << ")";
        return s.str();
      });

  py::class_<ConvexPolytope>(m, "ConvexPolytope")
      .def_property_readonly("dim", &ConvexPolytope::dim)
      .def_property_readonly("vertices", &ConvexPolytope::vertices)
      .def_property_readonly("faces", &ConvexPolytope::faces)
      .def("faces_of_dim",
           [](const ConvexPolytope& p, int k) {
             const auto span = p.faces_of_dim(k);
             return std::vector<Face>(span.begin(), span.end());
           })
      .def("f_vector", &ConvexPolytope::f_vector)
      .def("is_simplex", &ConvexPolytope::is_simplex)
      .def("face", &face_at, py::return_value_policy::copy, py::arg("vertex_ids"))
      .def("to_json", &serialize_polytope);

  m.def("simplex", [](std::vector<Vector> vs) { return build_simplex(std::move(vs)); }, py::arg("vertices"));
  m.def("parse_polytope", [](const std::string& text) { return parse_polytope(text); }, py::arg("text"));
  m.def("load_polytope", [](const std::string& path) { return load_polytope(path); }, py::arg("path"));
  m.def("cube", &cube, py::arg("n"));
  m.def("regular_simplex", &regular_simplex, py::arg("n"));
  m.def("corner_simplex", &corner_simplex, py::arg("n"));
  m.def("regular_polygon", &regular_polygon, py::arg("m"));
  m.def("random_simplex", &random_simplex, py::arg("n"), py::arg("seed"));
  m.def("random_polygon", &random_polygon, py::arg("m"), py::arg("seed"));
  m.def("flat_apex_tetrahedron", &flat_apex_tetrahedron, py::arg("height"));
  m.def("skew_segments_tetrahedron", &skew_segments_tetrahedron, py::arg("distance"));

  m.def(
      "solid_angle",
      [](const ConvexPolytope& p, std::vector<int> vertex_ids, const std::string& method,
         std::uint64_t samples, std::uint64_t seed, unsigned workers) {
        const auto r = solid_angle(p, face_at(p, std::move(vertex_ids)),
                                   angle_options(method, samples, seed, workers));
        return py::dict(py::arg("raw") = r.raw, py::arg("normalized") = r.normalized,
                        py::arg("stderr") = r.std_error, py::arg("method") = std::string(to_string(r.method)));
      },
      py::arg("polytope"), py::arg("vertex_ids"), py::arg("method") = "auto",
      py::arg("samples") = 1'000'000, py::arg("seed") = 0, py::arg("workers") = 1);

  m.def(
      "predict_simplex_probability",
      [](const ConvexPolytope& p, const std::string& method, std::uint64_t samples, std::uint64_t seed) {
        const auto e = predict_simplex_probability(p, angle_options(method, samples, seed, 1));
        return py::make_tuple(e.value, e.std_error);
      },
      py::arg("simplex"), py::arg("method") = "auto", py::arg("samples") = 1'000'000, py::arg("seed") = 0);

  m.def(
      "simulate_simplex_probability",
      [](const ConvexPolytope& p, std::uint64_t samples, std::uint64_t seed, unsigned workers) {
        const auto r = estimate_simplex_probability(p, mc_options(samples, seed, workers));
        return py::make_tuple(r.estimate, r.std_error);
      },
      py::arg("simplex"), py::arg("samples") = 1'000'000, py::arg("seed") = 0, py::arg("workers") = 1);

  m.def(
      "expected_face_count",
      [](const ConvexPolytope& p, int k, std::uint64_t samples, std::uint64_t seed, unsigned workers) {
        const auto r = estimate_expected_face_count(p, k, mc_options(samples, seed, workers));
        return py::dict(py::arg("estimate") = r.estimate, py::arg("stderr") = r.std_error,
                        py::arg("prediction") = r.prediction.value_or(0.0));
      },
      py::arg("polytope"), py::arg("k"), py::arg("samples") = 1'000'000, py::arg("seed") = 0,
      py::arg("workers") = 1);

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        std::ostringstream out, err;
        const int code = cli::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in process; returns (exit_code, stdout, stderr).");
}
