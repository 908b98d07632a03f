#include <doctest.h>

#include "polyangle/polytope_io.hpp"
#include "test_support.hpp"

using namespace polyangle;
using namespace polyangle::testing;

TEST_CASE("serialize then parse reproduces both representations and the lattice") {
  Rng rng(9);
  std::vector<ConvexPolytope> corpus{cube(3), regular_simplex(4), random_polygon(9, 4),
                                     random_simplex(3, 8)};
  corpus.push_back(transform(cube(3), random_rotation(3, rng), vec({0.1, 0.2, 0.3})));
  corpus.push_back(scale(regular_polygon(5), 2.5));
  for (const auto& p : corpus) {
    const auto q = parse_polytope(serialize_polytope(p));
    REQUIRE(q.dim() == p.dim());
    REQUIRE(q.vertices().size() == p.vertices().size());
    for (std::size_t i = 0; i < p.vertices().size(); ++i) CHECK(q.vertices()[i] == p.vertices()[i]);
    REQUIRE(q.halfspaces().size() == p.halfspaces().size());
    for (std::size_t i = 0; i < p.halfspaces().size(); ++i) {
      CHECK(q.halfspaces()[i].normal == p.halfspaces()[i].normal);
      CHECK(q.halfspaces()[i].offset == p.halfspaces()[i].offset);
    }
    REQUIRE(q.faces().size() == p.faces().size());
    for (std::size_t i = 0; i < p.faces().size(); ++i) {
      CHECK(q.faces()[i].vertex_ids == p.faces()[i].vertex_ids);
      CHECK(q.faces()[i].dim == p.faces()[i].dim);
    }
  }
}

TEST_CASE("simplex files may omit halfspaces") {
  const auto t = parse_polytope(R"({"dim": 2, "vertices": [[0, 0], [1, 0], [0, 1]]})");
  CHECK(t.f_vector() == std::vector<std::size_t>{3, 3});
  const auto tet = parse_polytope(
      R"({"dim": 3, "vertices": [[0.1, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]]})");
  CHECK(tet.vertices()[0](0) == 0.1);
}

TEST_CASE("rejected inputs") {
  SUBCASE("syntax error carries a line number") {
    try {
      parse_polytope("{\n  \"dim\": 2,\n  \"vertices\": [[0, 0] [1, 0]]\n}");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("non-simplex without halfspaces") {
    CHECK_THROWS_AS(parse_polytope(R"({"dim": 2, "vertices": [[0,0],[1,0],[0,1],[1,1]]})"), ParseError);
  }
  SUBCASE("coordinate count mismatch") {
    CHECK_THROWS_AS(parse_polytope(R"({"dim": 2, "vertices": [[0,0],[1,0,0],[0,1]]})"), ParseError);
  }
  SUBCASE("missing dim") { CHECK_THROWS_AS(parse_polytope(R"({"vertices": []})"), ParseError); }
  SUBCASE("dimension out of range") {
    CHECK_THROWS_AS(parse_polytope(R"({"dim": 1, "vertices": [[0],[1]]})"), ParseError);
  }
  SUBCASE("bad halfspace entry") {
    CHECK_THROWS_AS(
        parse_polytope(R"({"dim": 2, "vertices": [[0,0],[1,0],[0,1]], "halfspaces": [{"normal": [1,0]}]})"),
        ParseError);
  }
  SUBCASE("inconsistent representations") {
    CHECK_THROWS_AS(parse_polytope(R"({"dim": 2, "vertices": [[0,0],[1,0],[0,1],[1,1]],
        "halfspaces": [{"normal": [-1,0], "offset": 0}, {"normal": [1,0], "offset": 1},
                       {"normal": [0,-1], "offset": 0}]})"),
                    InconsistentPolytopeError);
  }
  SUBCASE("degenerate simplex") {
    CHECK_THROWS_AS(parse_polytope(R"({"dim": 2, "vertices": [[0,0],[1,1],[2,2]]})"),
                    DegenerateInputError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_polytope("/nonexistent/polytope.json"), ParseError);
  }
}
