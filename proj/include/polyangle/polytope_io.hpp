#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "polyangle/geometry.hpp"

namespace polyangle {

/// Malformed polytope text. `line` and `column` are 1-based, 0 when unknown.
class ParseError : public GeometryError {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Polytope files are JSON objects:
//   {"dim": 3, "vertices": [[...], ...], "halfspaces": [{"normal": [...], "offset": r}, ...]}
// Without "halfspaces" the vertex list must describe a simplex (dim+1 points).
// The face lattice is always recomputed on load.

ConvexPolytope parse_polytope(std::string_view text, double tolerance = kDefaultTolerance);
ConvexPolytope load_polytope(const std::filesystem::path& path, double tolerance = kDefaultTolerance);

/// Writes both representations; coordinates round-trip exactly.
std::string serialize_polytope(const ConvexPolytope& polytope);

}  // namespace polyangle
