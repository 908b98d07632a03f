#include "polyangle/solid_angle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

namespace polyangle {

std::string_view to_string(AngleMethod method) {
  switch (method) {
    case AngleMethod::Exact2D: return "exact-2d";
    case AngleMethod::Exact3DVertex: return "exact-3d-vertex";
    case AngleMethod::Exact3DEdge: return "exact-3d-edge";
    case AngleMethod::Facet: return "facet";
    case AngleMethod::MonteCarlo: return "monte-carlo";
  }
  return "unknown";
}

std::string_view to_string(MethodChoice choice) {
  switch (choice) {
    case MethodChoice::Auto: return "auto";
    case MethodChoice::Exact: return "exact";
    case MethodChoice::MonteCarlo: return "mc";
  }
  return "unknown";
}

namespace {

SolidAngleMeasure make_measure(int n, double raw, double std_error, AngleMethod method) {
  const double area = unit_sphere_area(n);
  return {raw, raw / area, std_error, method};
}

// Unit directions from `vertex` along each incident edge.
std::vector<Vector> edge_directions(const ConvexPolytope& polytope, const Face& vertex) {
  const int v = vertex.vertex_ids.front();
  std::vector<Vector> dirs;
  for (const Face& edge : polytope.faces_of_dim(1)) {
    if (edge.vertex_ids[0] != v && edge.vertex_ids[1] != v) continue;
    const int other = edge.vertex_ids[0] == v ? edge.vertex_ids[1] : edge.vertex_ids[0];
    dirs.push_back((polytope.vertices()[static_cast<std::size_t>(other)] -
                    polytope.vertices()[static_cast<std::size_t>(v)])
                       .normalized());
  }
  return dirs;
}

void require_dim(const ConvexPolytope& polytope, int n, const char* what) {
  if (polytope.dim() != n) {
    throw InvalidArgumentError(std::string(what) + ": requires a polytope in dimension " +
                               std::to_string(n));
  }
}

void require_face_dim(const Face& face, int k, const char* what) {
  if (face.dim != k) {
    throw InvalidArgumentError(std::string(what) + ": requires a face of dimension " +
                               std::to_string(k));
  }
}

// Solid angle of the cone spanned by three unit vectors.
double triangle_solid_angle(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                            const Eigen::Vector3d& c) {
  const double triple = std::abs(a.dot(b.cross(c)));
  const double denom = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
  return 2.0 * std::atan2(triple, denom);
}

}  // namespace

TangentCone::TangentCone(const ConvexPolytope& polytope, const Face& face) : dim_(polytope.dim()) {
  polytope.require_face(face);
  const auto& hs = polytope.halfspaces();
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const double slack = hs[i].offset - hs[i].normal.dot(face.centroid);
    if (std::abs(slack) <= polytope.tolerance()) {
      active_ids_.push_back(static_cast<int>(i));
      for (int j = 0; j < dim_; ++j) normals_.push_back(hs[i].normal(j));
    }
  }
}

bool TangentCone::contains(std::span<const double> u) const {
  const std::size_t n = static_cast<std::size_t>(dim_);
  for (std::size_t r = 0; r < active_ids_.size(); ++r) {
    const double* row = normals_.data() + r * n;
    double dot = 0.0;
    for (std::size_t j = 0; j < n; ++j) dot += row[j] * u[j];
    if (dot > 0.0) return false;
  }
  return true;
}

bool tangent_cone_contains(const ConvexPolytope& polytope, const Face& face, const Vector& u) {
  if (u.size() != polytope.dim() || !is_unit(u)) {
    throw InvalidArgumentError("tangent_cone_contains: direction must be a unit vector");
  }
  return TangentCone(polytope, face).contains(u);
}

SolidAngleMeasure solid_angle_exact_2d(const ConvexPolytope& polytope, const Face& vertex) {
  require_dim(polytope, 2, "solid_angle_exact_2d");
  require_face_dim(vertex, 0, "solid_angle_exact_2d");
  polytope.require_face(vertex);
  const auto dirs = edge_directions(polytope, vertex);
  if (dirs.size() != 2) throw InconsistentPolytopeError("polygon vertex without exactly two edges");
  const double cross = dirs[0](0) * dirs[1](1) - dirs[0](1) * dirs[1](0);
  return make_measure(2, std::atan2(std::abs(cross), dirs[0].dot(dirs[1])), 0.0,
                      AngleMethod::Exact2D);
}

SolidAngleMeasure solid_angle_exact_3d_vertex(const ConvexPolytope& polytope, const Face& vertex) {
  require_dim(polytope, 3, "solid_angle_exact_3d_vertex");
  require_face_dim(vertex, 0, "solid_angle_exact_3d_vertex");
  polytope.require_face(vertex);
  const auto dirs = edge_directions(polytope, vertex);
  if (dirs.size() < 3) {
    throw InconsistentPolytopeError("vertex has fewer than three incident edges");
  }

  // Cyclic order around the mean edge direction; ties broken by index.
  Eigen::Vector3d axis = Eigen::Vector3d::Zero();
  for (const auto& d : dirs) axis += d;
  axis.normalize();
  Eigen::Index pivot = 0;
  axis.cwiseAbs().minCoeff(&pivot);
  const Eigen::Vector3d e1 = axis.cross(Eigen::Vector3d::Unit(pivot)).normalized();
  const Eigen::Vector3d e2 = axis.cross(e1);
  std::vector<double> theta(dirs.size());
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    const Eigen::Vector3d d = dirs[i];
    theta[i] = std::atan2(d.dot(e2), d.dot(e1));
  }
  std::vector<std::size_t> order(dirs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return theta[a] < theta[b]; });

  double raw = 0.0;
  const Eigen::Vector3d apex = dirs[order[0]];
  for (std::size_t i = 1; i + 1 < order.size(); ++i) {
    raw += triangle_solid_angle(apex, dirs[order[i]], dirs[order[i + 1]]);
  }
  return make_measure(3, raw, 0.0, AngleMethod::Exact3DVertex);
}

SolidAngleMeasure solid_angle_exact_3d_edge(const ConvexPolytope& polytope, const Face& edge) {
  require_dim(polytope, 3, "solid_angle_exact_3d_edge");
  require_face_dim(edge, 1, "solid_angle_exact_3d_edge");
  polytope.require_face(edge);
  const auto& stored = polytope.faces()[*polytope.find_face(edge.vertex_ids)];
  if (stored.facet_ids.size() != 2) {
    throw InconsistentPolytopeError("edge is not shared by exactly two facets");
  }
  const Eigen::Vector3d n1 = polytope.halfspaces()[static_cast<std::size_t>(stored.facet_ids[0])].normal;
  const Eigen::Vector3d n2 = polytope.halfspaces()[static_cast<std::size_t>(stored.facet_ids[1])].normal;
  const double normal_angle = std::atan2(n1.cross(n2).norm(), n1.dot(n2));
  const double dihedral = std::numbers::pi - normal_angle;
  return make_measure(3, 2.0 * dihedral, 0.0, AngleMethod::Exact3DEdge);
}

SolidAngleMeasure solid_angle_facet(const ConvexPolytope& polytope, const Face& facet) {
  require_face_dim(facet, polytope.dim() - 1, "solid_angle_facet");
  polytope.require_face(facet);
  return make_measure(polytope.dim(), 0.5 * unit_sphere_area(polytope.dim()), 0.0,
                      AngleMethod::Facet);
}

ConeHits count_cone_hits(const ConvexPolytope& polytope, const Face& face, const McOptions& options) {
  if (options.samples == 0) throw InvalidArgumentError("Monte Carlo needs at least one sample");
  const TangentCone cone(polytope, face);
  const int n = polytope.dim();
  return run_sharded<ConeHits>(options, [&](Rng& rng, std::uint64_t count, ConeHits& acc) {
    std::array<double, kMaxDimension> u{};
    std::array<double, kMaxDimension> neg{};
    const std::span<double> view(u.data(), static_cast<std::size_t>(n));
    for (std::uint64_t s = 0; s < count; ++s) {
      fill_unit_sphere(rng, view);
      for (int j = 0; j < n; ++j) neg[static_cast<std::size_t>(j)] = -u[static_cast<std::size_t>(j)];
      acc.forward += cone.contains(view) ? 1 : 0;
      acc.backward += cone.contains(std::span<const double>(neg.data(), view.size())) ? 1 : 0;
    }
    acc.samples += count;
  });
}

SolidAngleMeasure solid_angle_mc(const ConvexPolytope& polytope, const Face& face,
                                 const McOptions& options) {
  if (options.samples == 0) throw InvalidArgumentError("Monte Carlo needs at least one sample");
  const TangentCone cone(polytope, face);
  const int n = polytope.dim();
  struct Hits {
    std::uint64_t value = 0;
    Hits& operator+=(const Hits& o) {
      value += o.value;
      return *this;
    }
  };
  const Hits hits = run_sharded<Hits>(options, [&](Rng& rng, std::uint64_t count, Hits& acc) {
    std::array<double, kMaxDimension> u{};
    const std::span<double> view(u.data(), static_cast<std::size_t>(n));
    for (std::uint64_t s = 0; s < count; ++s) {
      fill_unit_sphere(rng, view);
      acc.value += cone.contains(view) ? 1 : 0;
    }
  });
  const double samples = static_cast<double>(options.samples);
  const double p = static_cast<double>(hits.value) / samples;
  const double area = unit_sphere_area(n);
  return make_measure(n, area * p, area * std::sqrt(p * (1.0 - p) / samples),
                      AngleMethod::MonteCarlo);
}

bool has_exact_angle(const ConvexPolytope& polytope, const Face& face) {
  return face.dim == polytope.dim() - 1 || polytope.dim() == 2 || polytope.dim() == 3;
}

SolidAngleMeasure solid_angle(const ConvexPolytope& polytope, const Face& face,
                              const AngleOptions& options) {
  const int n = polytope.dim();
  bool exact = false;
  switch (options.method) {
    case MethodChoice::Auto: exact = n <= 3; break;
    case MethodChoice::Exact:
      if (!has_exact_angle(polytope, face)) {
        throw InvalidArgumentError("no closed-form solid angle for a " + std::to_string(face.dim) +
                                   "-face in dimension " + std::to_string(n));
      }
      exact = true;
      break;
    case MethodChoice::MonteCarlo: exact = false; break;
  }
  if (!exact) return solid_angle_mc(polytope, face, options.mc);
  if (face.dim == n - 1) return solid_angle_facet(polytope, face);
  if (n == 2) return solid_angle_exact_2d(polytope, face);
  if (face.dim == 0) return solid_angle_exact_3d_vertex(polytope, face);
  return solid_angle_exact_3d_edge(polytope, face);
}

double vertex_event_probability(const ConvexPolytope& polytope, const Face& vertex,
                                const AngleOptions& options) {
  require_face_dim(vertex, 0, "vertex_event_probability");
  return 2.0 * solid_angle(polytope, vertex, options).normalized;
}

}  // namespace polyangle
