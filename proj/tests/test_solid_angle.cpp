#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polyangle/solid_angle.hpp"
#include "test_support.hpp"

using namespace polyangle;
using namespace polyangle::testing;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTetraVertexAngle = 0.5512855984325308;  // acos(23/27), see test_oracles
constexpr double kTetraEdgeAngle = 2.4619188346815495;    // 2 acos(1/3)

const Face& vertex_face(const ConvexPolytope& p, int id) { return p.faces_of_dim(0)[static_cast<std::size_t>(id)]; }

const Face& face_with(const ConvexPolytope& p, std::vector<int> ids) {
  return p.faces()[p.find_face(std::move(ids)).value()];
}

}  // namespace

TEST_CASE("tangent_cone_contains") {
  const auto square = unit_square();
  const Face& corner = face_with(square, {0});
  REQUIRE(corner.centroid.norm() == 0.0);
  CHECK(tangent_cone_contains(square, corner, vec({1, 1}).normalized()));
  CHECK_FALSE(tangent_cone_contains(square, corner, vec({-1, 0})));

  const auto c = cube(3);
  const Face& edge = face_with(c, {0, 1});  // along the x axis
  CHECK(tangent_cone_contains(c, edge, vec({1, 0, 0})));
  CHECK(tangent_cone_contains(c, edge, vec({-1, 0, 0})));
  CHECK_FALSE(tangent_cone_contains(c, edge, vec({0, -1, 0})));

  CHECK_THROWS_AS(tangent_cone_contains(square, corner, vec({1, 1})), InvalidArgumentError);
  Face bogus{0, {9}, Vector::Zero(2), {}};
  CHECK_THROWS_AS(tangent_cone_contains(square, bogus, vec({1, 0})), InvalidArgumentError);
}

TEST_CASE("solid_angle_exact_2d") {
  const auto tri = regular_polygon(3);
  for (const Face& v : tri.faces_of_dim(0)) {
    CHECK(std::abs(solid_angle_exact_2d(tri, v).raw - kPi / 3) <= 1e-12);
  }
  CHECK(std::abs(solid_angle_exact_2d(unit_square(), vertex_face(unit_square(), 2)).raw - kPi / 2) <= 1e-15);
  const auto right = right_triangle();
  const auto m = solid_angle_exact_2d(right, vertex_face(right, 0));
  CHECK(std::abs(m.raw - kPi / 2) <= 1e-15);
  CHECK(m.std_error == 0.0);
  CHECK(m.method == AngleMethod::Exact2D);
  CHECK_THROWS_AS(solid_angle_exact_2d(cube(3), vertex_face(cube(3), 0)), InvalidArgumentError);
}

TEST_CASE("solid_angle_exact_3d_vertex") {
  const auto c = cube(3);
  for (const Face& v : c.faces_of_dim(0)) {
    CHECK(std::abs(solid_angle_exact_3d_vertex(c, v).raw - kPi / 2) <= 1e-12);
  }
  const auto tet = regular_simplex(3);
  for (const Face& v : tet.faces_of_dim(0)) {
    CHECK(std::abs(solid_angle_exact_3d_vertex(tet, v).raw - kTetraVertexAngle) <= 1e-12);
  }
  const auto corner = corner_simplex(3);
  CHECK(std::abs(solid_angle_exact_3d_vertex(corner, vertex_face(corner, 0)).raw - kPi / 2) <= 1e-12);
  CHECK_THROWS_AS(solid_angle_exact_3d_vertex(unit_square(), vertex_face(unit_square(), 0)),
                  InvalidArgumentError);
  CHECK_THROWS_AS(solid_angle_exact_3d_vertex(c, face_with(c, {0, 1})), InvalidArgumentError);
}

TEST_CASE("solid_angle_exact_3d_vertex handles vertices of degree above three") {
  // Regular octahedron: four edges per vertex.
  std::vector<Vector> vs{vec({1, 0, 0}), vec({-1, 0, 0}), vec({0, 1, 0}),
                         vec({0, -1, 0}), vec({0, 0, 1}), vec({0, 0, -1})};
  std::vector<HalfSpace> hs;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) hs.push_back({vec({double(sx), double(sy), double(sz)}), 1.0});
  const auto octa = build_polytope(vs, hs);
  CHECK(octa.f_vector() == std::vector<std::size_t>{6, 12, 8});
  // Known closed forms: vertex angle 4 asin(1/3), dihedral acos(-1/3).
  const double edge = 2.0 * std::acos(-1.0 / 3.0);
  const double expected = 4.0 * std::asin(1.0 / 3.0);
  for (const Face& v : octa.faces_of_dim(0)) {
    CHECK(std::abs(solid_angle_exact_3d_vertex(octa, v).raw - expected) <= 1e-12);
  }
  for (const Face& e : octa.faces_of_dim(1)) {
    CHECK(std::abs(solid_angle_exact_3d_edge(octa, e).raw - edge) <= 1e-12);
  }
}

TEST_CASE("solid_angle_exact_3d_edge") {
  const auto c = cube(3);
  for (const Face& e : c.faces_of_dim(1)) {
    CHECK(std::abs(solid_angle_exact_3d_edge(c, e).raw - kPi) <= 1e-12);
  }
  const auto tet = regular_simplex(3);
  for (const Face& e : tet.faces_of_dim(1)) {
    CHECK(std::abs(solid_angle_exact_3d_edge(tet, e).raw - kTetraEdgeAngle) <= 1e-12);
  }
  SUBCASE("flat limit approaches a half-space") {
    const auto flat = flat_apex_tetrahedron(1e-6);
    for (int base = 0; base < 3; ++base) {
      const auto m = solid_angle_exact_3d_edge(flat, face_with(flat, {base, 3}));
      CHECK(std::abs(m.raw - 2 * kPi) <= 1e-4);
      CHECK(std::abs(m.normalized - 0.5) <= 1e-5);
      CHECK(m.normalized < 0.5);
    }
  }
}

TEST_CASE("solid_angle_mc examples") {
  const McOptions mc{1'000'000, 3, 1};
  const auto c = cube(3);
  const auto cube_mc = solid_angle_mc(c, vertex_face(c, 0), mc);
  CHECK(std::abs(cube_mc.raw - 0.125 * 4 * kPi) <= 4 * cube_mc.std_error);
  CHECK(cube_mc.method == AngleMethod::MonteCarlo);

  const auto tet = regular_simplex(3);
  const auto tet_mc = solid_angle_mc(tet, vertex_face(tet, 1), mc);
  CHECK(std::abs(tet_mc.raw - solid_angle_exact_3d_vertex(tet, vertex_face(tet, 1)).raw) <=
        4 * tet_mc.std_error);

  const auto sq = unit_square();
  const auto sq_mc = solid_angle_mc(sq, vertex_face(sq, 0), {100'000, 4, 1});
  CHECK(std::abs(sq_mc.raw - kPi / 2) <= 4 * sq_mc.std_error);

  CHECK_THROWS_AS(solid_angle_mc(sq, vertex_face(sq, 0), {0, 1, 1}), InvalidArgumentError);
}

TEST_CASE("Monte Carlo estimates are bit-identical for identical seeds") {
  const auto tet = random_simplex(3, 77);
  const Face& v = vertex_face(tet, 2);
  for (unsigned workers : {1u, 3u}) {
    const McOptions mc{200'000, 17, workers};
    const auto a = solid_angle_mc(tet, v, mc);
    const auto b = solid_angle_mc(tet, v, mc);
    CHECK(a.raw == b.raw);
    CHECK(a.std_error == b.std_error);
  }
}

TEST_CASE("vertex_event_probability") {
  const auto tri = random_simplex(2, 5);
  for (const Face& v : tri.faces_of_dim(0)) {
    const double theta = solid_angle_exact_2d(tri, v).raw;
    CHECK(std::abs(vertex_event_probability(tri, v) - theta / kPi) <= 1e-15);
  }
  CHECK(std::abs(vertex_event_probability(cube(3), vertex_face(cube(3), 4)) - 0.25) <= 1e-15);
  CHECK(std::abs(vertex_event_probability(regular_simplex(3), vertex_face(regular_simplex(3), 0)) -
                 0.0877398280459109) <= 1e-14);
  const auto c = cube(3);
  CHECK_THROWS_AS(vertex_event_probability(c, face_with(c, {0, 1})), InvalidArgumentError);
}

TEST_CASE("method dispatch") {
  const auto c4 = cube(4);
  const Face& v = vertex_face(c4, 0);
  CHECK_THROWS_AS(solid_angle(c4, v, {MethodChoice::Exact, {}}), InvalidArgumentError);
  const auto facet = solid_angle(c4, c4.faces_of_dim(3)[0], {MethodChoice::Exact, {}});
  CHECK(facet.method == AngleMethod::Facet);
  CHECK(std::abs(facet.normalized - 0.5) <= 1e-15);
  const auto mc = solid_angle(c4, v, {MethodChoice::Auto, {200'000, 1, 1}});
  CHECK(mc.method == AngleMethod::MonteCarlo);
  CHECK(std::abs(mc.normalized - 1.0 / 16) <= 4 * mc.std_error / unit_sphere_area(4));
  CHECK(solid_angle(cube(3), vertex_face(cube(3), 0)).method == AngleMethod::Exact3DVertex);
  CHECK(solid_angle(unit_square(), unit_square().faces_of_dim(1)[0]).method == AngleMethod::Facet);
}

TEST_CASE("every proper-face angle is normalized into (0, 1/2]") {
  for (const auto& [name, p] : planar_corpus()) {
    for (const Face& f : p.faces()) {
      const auto m = solid_angle(p, f);
      CAPTURE(name);
      CHECK(std::abs(m.normalized - m.raw / unit_sphere_area(p.dim())) <= 1e-12);
      CHECK(m.normalized > 0.0);
      if (f.dim < p.dim() - 1) CHECK(m.normalized < 0.5);
      else CHECK(m.normalized == doctest::Approx(0.5));
    }
  }
  for (const auto& [name, p] : spatial_corpus()) {
    for (const Face& f : p.faces()) {
      const auto m = solid_angle(p, f);
      CAPTURE(name);
      CHECK(m.normalized > 0.0);
      if (f.dim < p.dim() - 1) CHECK(m.normalized < 0.5);
    }
  }
}

TEST_CASE("vertex-transitive polytopes have equal vertex angles") {
  for (const auto& p : {cube(3), regular_simplex(3)}) {
    const double first = solid_angle(p, vertex_face(p, 0)).raw;
    for (const Face& v : p.faces_of_dim(0)) CHECK(std::abs(solid_angle(p, v).raw - first) <= 1e-9);
  }
  const auto s4 = regular_simplex(4);
  const McOptions mc{200'000, 8, 1};
  const auto first = solid_angle_mc(s4, vertex_face(s4, 0), mc);
  for (const Face& v : s4.faces_of_dim(0)) {
    const auto m = solid_angle_mc(s4, v, {200'000, 9 + static_cast<std::uint64_t>(v.vertex_ids[0]), 1});
    CHECK(std::abs(m.raw - first.raw) <=
          4 * std::sqrt(m.std_error * m.std_error + first.std_error * first.std_error));
  }
}

TEST_CASE("antipodal doubling of the cone hit fraction") {
  for (const auto& p : {cube(3), regular_simplex(3), random_simplex(3, 4)}) {
    const auto hits = count_cone_hits(p, vertex_face(p, 0), {400'000, 21, 1});
    const double n = static_cast<double>(hits.samples);
    const double both = static_cast<double>(hits.forward + hits.backward) / n;
    const double doubled = 2.0 * static_cast<double>(hits.forward) / n;
    CHECK(std::abs(both - doubled) <= 4.0 * std::sqrt(both / n));
  }
}
