#include "polyangle/polytope_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace polyangle {

using nlohmann::json;

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : GeometryError(what), line_(line),
      column_(column) {}

namespace {

void position_of(std::string_view text, std::size_t byte, std::size_t& line, std::size_t& column) {
  line = 1;
  column = 1;
  const std::size_t end = std::min(byte, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

Vector read_coords(const json& node, int dim, const std::string& where) {
  if (!node.is_array()) throw ParseError(where + ": expected an array of numbers");
  if (static_cast<int>(node.size()) != dim) {
    throw ParseError(where + ": expected " + std::to_string(dim) + " coordinates, got " +
                     std::to_string(node.size()));
  }
  Vector v(dim);
  for (int i = 0; i < dim; ++i) {
    const auto& x = node[static_cast<std::size_t>(i)];
    if (!x.is_number()) throw ParseError(where + "[" + std::to_string(i) + "]: expected a number");
    v(i) = x.get<double>();
  }
  return v;
}

json coords_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

}  // namespace

ConvexPolytope parse_polytope(std::string_view text, double tolerance) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 0, column = 0;
    position_of(text, e.byte == 0 ? 0 : e.byte - 1, line, column);
    throw ParseError("malformed polytope file: " + std::string(e.what()), line, column);
  }
  if (!doc.is_object()) throw ParseError("polytope file must contain a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw ParseError("\"dim\": missing or not an integer");
  }
  const int dim = doc["dim"].get<int>();
  if (dim < kMinDimension || dim > kMaxDimension) {
    throw ParseError("\"dim\": " + std::to_string(dim) + " is outside the supported range [2, 8]");
  }
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError("\"vertices\": missing or not an array");
  }
  std::vector<Vector> vertices;
  for (std::size_t i = 0; i < doc["vertices"].size(); ++i) {
    vertices.push_back(read_coords(doc["vertices"][i], dim, "vertices[" + std::to_string(i) + "]"));
  }

  if (!doc.contains("halfspaces")) {
    if (static_cast<int>(vertices.size()) != dim + 1) {
      throw ParseError("\"halfspaces\" is required unless the vertices form a simplex (dim+1 points)");
    }
    return build_simplex(std::move(vertices), tolerance);
  }
  const auto& hs = doc["halfspaces"];
  if (!hs.is_array()) throw ParseError("\"halfspaces\": expected an array");
  std::vector<HalfSpace> halfspaces;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::string where = "halfspaces[" + std::to_string(i) + "]";
    const auto& h = hs[i];
    if (!h.is_object() || !h.contains("normal") || !h.contains("offset")) {
      throw ParseError(where + ": expected {\"normal\": [...], \"offset\": r}");
    }
    if (!h["offset"].is_number()) throw ParseError(where + ".offset: expected a number");
    halfspaces.push_back({read_coords(h["normal"], dim, where + ".normal"), h["offset"].get<double>()});
  }
  return build_polytope(std::move(vertices), std::move(halfspaces), tolerance);
}

ConvexPolytope load_polytope(const std::filesystem::path& path, double tolerance) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open polytope file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_polytope(buf.str(), tolerance);
}

std::string serialize_polytope(const ConvexPolytope& polytope) {
  json doc;
  doc["dim"] = polytope.dim();
  doc["vertices"] = json::array();
  for (const auto& v : polytope.vertices()) doc["vertices"].push_back(coords_json(v));
  doc["halfspaces"] = json::array();
  for (const auto& h : polytope.halfspaces()) {
    doc["halfspaces"].push_back({{"normal", coords_json(h.normal)}, {"offset", h.offset}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace polyangle
