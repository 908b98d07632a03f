#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "polyangle/identities.hpp"
#include "polyangle/projection.hpp"
#include "test_support.hpp"

using namespace polyangle;
using namespace polyangle::testing;

namespace {
constexpr double kTetraProbability = 0.3509593121836436;  // 2 acos(23/27) / pi

const Face& face_with(const ConvexPolytope& p, std::vector<int> ids) {
  return p.faces()[p.find_face(std::move(ids)).value()];
}
}  // namespace

TEST_CASE("complement basis is orthonormal and orthogonal to u") {
  Rng rng(3);
  for (int n = 2; n <= kMaxDimension; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const Vector u = sample_unit_sphere(rng, n);
      const Eigen::MatrixXd b = complement_basis(u);
      REQUIRE(b.rows() == n);
      REQUIRE(b.cols() == n - 1);
      CHECK((b.transpose() * b - Eigen::MatrixXd::Identity(n - 1, n - 1)).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK((b.transpose() * u).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
  CHECK_THROWS_AS(complement_basis(vec({1, 1})), InvalidArgumentError);
}

TEST_CASE("project") {
  SUBCASE("cube along z gives the unit square twice") {
    const auto c = cube(3);
    const auto images = project(c, vec({0, 0, 1}));
    REQUIRE(images.size() == 8);
    for (int v = 0; v < 4; ++v) CHECK((images[static_cast<std::size_t>(v)] - images[static_cast<std::size_t>(v + 4)]).norm() <= 1e-15);
    std::multiset<long> dists;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        dists.insert(std::lround(1e6 * (images[static_cast<std::size_t>(a)] - images[static_cast<std::size_t>(b)]).squaredNorm()));
    CHECK(dists == std::multiset<long>{1000000, 1000000, 1000000, 1000000, 2000000, 2000000});
  }
  SUBCASE("triangle projects to scalars") {
    const auto images = project(random_simplex(2, 1), vec({0.6, 0.8}));
    REQUIRE(images.size() == 3);
    for (const auto& y : images) CHECK(y.size() == 1);
  }
  SUBCASE("projection along an edge merges its endpoints") {
    const auto t = regular_simplex(3);
    const Vector u = (t.vertices()[1] - t.vertices()[0]).normalized();
    const auto images = project(t, u);
    CHECK((images[0] - images[1]).norm() <= 1e-12);
    CHECK_FALSE(classify_simplex_projection(t, u).simplex_class == SimplexClass::LowerSimplex);
  }
  CHECK_THROWS_AS(project(cube(3), vec({0, 0, 2})), InvalidArgumentError);
}

TEST_CASE("classify_simplex_projection examples") {
  SUBCASE("triangles always project to segments") {
    Rng rng(8);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto tri = random_simplex(2, seed);
      for (int i = 0; i < 100; ++i) {
        const auto outcome = classify_simplex_projection(tri, sample_unit_sphere(rng, 2));
        CHECK(outcome.simplex_class == SimplexClass::LowerSimplex);
        REQUIRE(outcome.interior_vertex.has_value());
        CHECK_FALSE(outcome.surviving_faces[0][static_cast<std::size_t>(*outcome.interior_vertex)]);
      }
    }
  }
  SUBCASE("flat apex drops onto the base") {
    const auto t = flat_apex_tetrahedron(1e-3);
    const auto outcome = classify_simplex_projection(t, vec({0, 0, 1}));
    CHECK(outcome.simplex_class == SimplexClass::LowerSimplex);
    CHECK(outcome.interior_vertex == 3);
  }
  SUBCASE("right corner along the diagonal") {
    const auto t = corner_simplex(3);
    const auto outcome = classify_simplex_projection(t, vec({1, 1, 1}).normalized());
    CHECK(outcome.simplex_class == SimplexClass::LowerSimplex);
    CHECK(outcome.interior_vertex == 0);
  }
  SUBCASE("skew segments viewed from above") {
    const auto t = skew_segments_tetrahedron(0.5);
    const auto outcome = classify_simplex_projection(t, vec({0, 0, 1}));
    CHECK(outcome.simplex_class == SimplexClass::NotSimplex);
    CHECK_FALSE(outcome.interior_vertex.has_value());
  }
  CHECK_THROWS_AS(classify_simplex_projection(cube(3), vec({0, 0, 1})), InvalidArgumentError);
}

TEST_CASE("classification agrees with the line-crossing oracle") {
  Rng rng(12);
  for (int n = 2; n <= 5; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto s = random_simplex(n, seed + 40);
      for (int trial = 0; trial < 200; ++trial) {
        const Vector u = sample_unit_sphere(rng, n);
        const auto outcome = classify_simplex_projection(s, u);
        if (outcome.simplex_class == SimplexClass::Degenerate) continue;
        int inside = 0;
        for (int v = 0; v <= n; ++v) {
          const bool oracle = projects_inside(s.vertices(), v, u) || projects_inside(s.vertices(), v, -u);
          inside += oracle ? 1 : 0;
          CHECK(oracle == (outcome.interior_vertex == v));
        }
        CHECK(inside <= 1);
      }
    }
  }
}

TEST_CASE("face_survives") {
  const auto c = cube(3);
  const Face& top = face_with(c, {4, 5, 6, 7});
  CHECK_FALSE(face_survives(c, top, vec({0, 0, 1})));
  CHECK(face_survives(c, top, vec({1, 0, 0})));
  CHECK(face_survival(c, top, vec({1, 0, 0})) == Survival::Degenerate);
  CHECK(face_survival(c, top, vec({1, 0, 1}).normalized()) == Survival::Pierced);

  const Face& corner = face_with(c, {0});
  CHECK_FALSE(face_survives(c, corner, vec({1, 2, 3}).normalized()));
  CHECK_FALSE(face_survives(c, corner, -vec({1, 2, 3}).normalized()));
  CHECK(face_survives(c, corner, vec({1, -2, 3}).normalized()));
}

TEST_CASE("vertex survival is the complement of membership in the double cone") {
  Rng rng(30);
  for (const auto& p : {cube(3), regular_simplex(3), random_simplex(3, 2), random_simplex(4, 3),
                        cube(4), random_polygon(6, 1)}) {
    for (const Face& v : p.faces_of_dim(0)) {
      const TangentCone cone(p, v);
      for (int trial = 0; trial < 300; ++trial) {
        const Vector u = sample_unit_sphere(rng, p.dim());
        const Survival state = face_survival(p, v, u);
        if (state == Survival::Degenerate) continue;
        const bool in_double_cone = cone.contains(u) || cone.contains(Vector(-u));
        CHECK((state == Survival::Survives) != in_double_cone);
      }
    }
  }
}

TEST_CASE("estimate_simplex_probability") {
  SUBCASE("triangles: probability exactly one") {
    const auto r = estimate_simplex_probability(random_simplex(2, 4), {10'000, 1, 1});
    CHECK(r.estimate == 1.0);
    CHECK(r.rejected == 0);
    CHECK(r.degenerate == 0);
    CHECK_FALSE(r.prediction.has_value());
  }
  SUBCASE("regular tetrahedron") {
    const auto r = estimate_simplex_probability(regular_simplex(3), {1'000'000, 2, 1});
    CHECK(std::abs(r.estimate - kTetraProbability) <= 4 * r.std_error);
    CHECK(static_cast<double>(r.degenerate) < 1e-3 * 1e6);
  }
  SUBCASE("skew segments nearly coplanar") {
    const auto r = estimate_simplex_probability(skew_segments_tetrahedron(1e-3), {100'000, 3, 1});
    CHECK(r.estimate < 0.005);
  }
  SUBCASE("worker count changes the stream, not the statistics") {
    const auto a = estimate_simplex_probability(regular_simplex(3), {200'000, 5, 2});
    const auto b = estimate_simplex_probability(regular_simplex(3), {200'000, 5, 2});
    CHECK(a.estimate == b.estimate);
    CHECK(std::abs(a.estimate - kTetraProbability) <= 4 * a.std_error);
  }
}

TEST_CASE("estimate_expected_face_count") {
  SUBCASE("cube vertices and edges") {
    for (int k : {0, 1}) {
      const auto r = estimate_expected_face_count(cube(3), k, {1'000'000, 7, 1});
      REQUIRE(r.prediction.has_value());
      CHECK(std::abs(*r.prediction - 6.0) <= 1e-12);
      CHECK(*r.residual <= std::max(1e-9, 4 * r.std_error));
    }
  }
  SUBCASE("polygons always cast two-vertex shadows") {
    const auto r = estimate_expected_face_count(random_polygon(7, 2), 0, {20'000, 1, 1});
    CHECK(std::abs(*r.prediction - 2.0) <= 1e-12);
    CHECK(r.estimate == 2.0);
  }
  SUBCASE("facets are rejected") {
    CHECK_THROWS_AS(estimate_expected_face_count(cube(3), 2, {10, 1, 1}), InvalidArgumentError);
  }
  SUBCASE("corpus consistency for every valid k") {
    std::vector<ConvexPolytope> corpus{cube(3), regular_simplex(3), random_simplex(3, 5),
                                       random_simplex(3, 6), regular_simplex(4)};
    for (const auto& p : corpus) {
      for (int k = 0; k <= p.dim() - 2; ++k) {
        const auto r = estimate_expected_face_count(p, k, {200'000, 11, 1},
                                                    {MethodChoice::Auto, {200'000, 13, 1}});
        CAPTURE(p.dim());
        CAPTURE(k);
        const double sigma = std::hypot(r.std_error, r.prediction_std_error);
        CHECK(*r.residual <= std::max(1e-9, 4 * sigma));
        CHECK(static_cast<double>(r.degenerate) < 1e-3 * 2e5);
      }
    }
  }
}
