#include "polyangle/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>

namespace polyangle {

double unit_ball_volume(int n) {
  if (n < 1) throw InvalidArgumentError("unit_ball_volume: dimension must be at least 1");
  const double half = 0.5 * n;
  return std::pow(std::numbers::pi, half) / std::tgamma(1.0 + half);
}

double unit_sphere_area(int n) { return n * unit_ball_volume(n); }

bool is_unit(const Vector& u) { return u.size() > 0 && std::abs(u.norm() - 1.0) <= 1e-12; }

int affine_rank(std::span<const Vector> points, double tolerance) {
  if (points.empty()) return -1;
  if (points.size() == 1) return 0;
  const auto dim = points.front().size();
  Eigen::MatrixXd diffs(static_cast<Eigen::Index>(points.size() - 1), dim);
  for (std::size_t i = 1; i < points.size(); ++i) {
    diffs.row(static_cast<Eigen::Index>(i - 1)) = (points[i] - points.front()).transpose();
  }
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(diffs).singularValues();
  if (sv.size() == 0) return 0;
  const double threshold = tolerance * std::max(1.0, sv(0));
  return static_cast<int>((sv.array() > threshold).count());
}

std::span<const Face> ConvexPolytope::faces_of_dim(int k) const {
  if (k < 0 || k >= dim_) return {};
  const auto begin = dim_offsets_[static_cast<std::size_t>(k)];
  const auto end = dim_offsets_[static_cast<std::size_t>(k) + 1];
  return std::span<const Face>(faces_).subspan(begin, end - begin);
}

std::vector<std::size_t> ConvexPolytope::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(dim_));
  for (int k = 0; k < dim_; ++k) f[static_cast<std::size_t>(k)] = face_count(k);
  return f;
}

std::optional<std::size_t> ConvexPolytope::find_face(std::vector<int> vertex_ids) const {
  std::sort(vertex_ids.begin(), vertex_ids.end());
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    if (faces_[i].vertex_ids == vertex_ids) return i;
  }
  return std::nullopt;
}

void ConvexPolytope::require_face(const Face& face) const {
  const auto index = find_face(face.vertex_ids);
  if (!index || faces_[*index].dim != face.dim) {
    throw InvalidArgumentError("face is not a proper face of this polytope");
  }
}

const Face& ConvexPolytope::facet(std::size_t halfspace_index) const {
  return faces_.at(facet_face_index_.at(halfspace_index));
}

namespace {

void check_dimension(int n) {
  if (n < kMinDimension || n > kMaxDimension) {
    std::ostringstream msg;
    msg << "ambient dimension " << n << " outside supported range [" << kMinDimension << ", "
        << kMaxDimension << "]";
    throw InvalidArgumentError(msg.str());
  }
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Vector> gather(const std::vector<Vector>& vertices, const std::vector<int>& ids) {
  std::vector<Vector> pts;
  pts.reserve(ids.size());
  for (int id : ids) pts.push_back(vertices[static_cast<std::size_t>(id)]);
  return pts;
}

}  // namespace

ConvexPolytope build_polytope(std::vector<Vector> vertices, std::vector<HalfSpace> halfspaces,
                              double tolerance) {
  if (!(tolerance > 0.0)) throw InvalidArgumentError("tolerance must be positive");
  if (vertices.empty()) throw InvalidArgumentError("polytope has no vertices");
  const int n = static_cast<int>(vertices.front().size());
  check_dimension(n);
  for (const auto& v : vertices) {
    if (v.size() != n) throw InvalidArgumentError("vertices have mismatched dimensions");
    if (!v.allFinite()) throw InvalidArgumentError("vertex coordinates must be finite");
  }
  for (auto& h : halfspaces) {
    if (h.normal.size() != n) throw InvalidArgumentError("halfspace normal has wrong dimension");
    const double norm = h.normal.norm();
    if (!(norm > 0.0) || !std::isfinite(norm) || !std::isfinite(h.offset)) {
      throw InvalidArgumentError("halfspace normal must be finite and nonzero");
    }
    // Leave already-normalized input untouched so serialization round-trips bit-exactly.
    if (std::abs(norm - 1.0) > 8.0 * std::numeric_limits<double>::epsilon()) {
      h.normal /= norm;
      h.offset /= norm;
    }
  }

  if (affine_rank(vertices, tolerance) != n) {
    throw DegenerateInputError("vertices do not span the ambient space (hollow polytope)");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if ((vertices[i] - vertices[j]).norm() <= tolerance) {
        throw InconsistentPolytopeError("duplicate vertex " + std::to_string(j));
      }
    }
  }

  // Vertex-facet incidence.
  std::vector<std::vector<int>> active(halfspaces.size());
  std::vector<int> vertex_degree(vertices.size(), 0);
  for (std::size_t h = 0; h < halfspaces.size(); ++h) {
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      const double slack = halfspaces[h].offset - halfspaces[h].normal.dot(vertices[v]);
      if (slack < -tolerance) {
        std::ostringstream msg;
        msg << "vertex " << v << " violates halfspace " << h << " by " << -slack;
        throw InconsistentPolytopeError(msg.str());
      }
      if (slack <= tolerance) {
        active[h].push_back(static_cast<int>(v));
        ++vertex_degree[v];
      }
    }
    if (affine_rank(gather(vertices, active[h]), tolerance) != n - 1) {
      throw InconsistentPolytopeError("halfspace " + std::to_string(h) +
                                      " does not support a facet of the vertex set");
    }
    for (std::size_t g = 0; g < h; ++g) {
      if (active[g] == active[h]) {
        throw InconsistentPolytopeError("halfspaces " + std::to_string(g) + " and " +
                                        std::to_string(h) + " describe the same facet");
      }
    }
  }
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (vertex_degree[v] < n) {
      throw InconsistentPolytopeError("vertex " + std::to_string(v) + " lies on only " +
                                      std::to_string(vertex_degree[v]) + " facets");
    }
  }

  // Close the facet vertex sets under intersection.
  std::set<std::vector<int>> seen(active.begin(), active.end());
  std::deque<std::vector<int>> pending(active.begin(), active.end());
  while (!pending.empty()) {
    const std::vector<int> current = std::move(pending.front());
    pending.pop_front();
    for (const auto& facet_set : active) {
      auto meet = intersect(current, facet_set);
      if (meet.empty() || meet.size() == current.size()) continue;
      if (seen.insert(meet).second) pending.push_back(std::move(meet));
    }
  }

  std::vector<Face> faces;
  faces.reserve(seen.size());
  for (const auto& ids : seen) {
    Face face;
    face.vertex_ids = ids;
    const auto pts = gather(vertices, ids);
    face.dim = affine_rank(pts, tolerance);
    face.centroid = Vector::Zero(n);
    for (const auto& p : pts) face.centroid += p;
    face.centroid /= static_cast<double>(pts.size());
    for (std::size_t h = 0; h < active.size(); ++h) {
      if (std::includes(active[h].begin(), active[h].end(), ids.begin(), ids.end())) {
        face.facet_ids.push_back(static_cast<int>(h));
      }
    }
    Eigen::MatrixXd normals(static_cast<Eigen::Index>(face.facet_ids.size()), n);
    for (std::size_t r = 0; r < face.facet_ids.size(); ++r) {
      normals.row(static_cast<Eigen::Index>(r)) =
          halfspaces[static_cast<std::size_t>(face.facet_ids[r])].normal.transpose();
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(normals);
    lu.setThreshold(tolerance);
    if (face.dim != n - static_cast<int>(lu.rank())) {
      throw InconsistentPolytopeError("face lattice is inconsistent with the halfspace normals");
    }
    if (face.dim == 1 && ids.size() != 2) {
      throw InconsistentPolytopeError("an edge of the lattice does not have exactly two vertices");
    }
    faces.push_back(std::move(face));
  }
  std::stable_sort(faces.begin(), faces.end(),
                   [](const Face& a, const Face& b) { return a.dim < b.dim; });

  ConvexPolytope p;
  p.dim_ = n;
  p.tolerance_ = tolerance;
  p.dim_offsets_.assign(static_cast<std::size_t>(n) + 1, faces.size());
  for (int k = n - 1; k >= 0; --k) {
    const auto it = std::lower_bound(faces.begin(), faces.end(), k,
                                     [](const Face& f, int d) { return f.dim < d; });
    p.dim_offsets_[static_cast<std::size_t>(k)] = static_cast<std::size_t>(it - faces.begin());
  }
  p.vertices_ = std::move(vertices);
  p.halfspaces_ = std::move(halfspaces);
  p.faces_ = std::move(faces);

  if (p.face_count(0) != p.vertices_.size()) {
    throw InconsistentPolytopeError("some listed points are not vertices of the polytope");
  }
  if (p.face_count(n - 1) != p.halfspaces_.size()) {
    throw InconsistentPolytopeError("facet count does not match the halfspace count");
  }
  p.facet_face_index_.resize(p.halfspaces_.size());
  for (std::size_t h = 0; h < active.size(); ++h) {
    p.facet_face_index_[h] = *p.find_face(active[h]);
  }
  if (euler_characteristic(p) != 1 + ((n - 1) % 2 == 0 ? 1 : -1)) {
    throw InconsistentPolytopeError("face lattice violates the Euler relation; representations disagree");
  }
  return p;
}

ConvexPolytope build_simplex(std::vector<Vector> vertices, double tolerance) {
  if (vertices.empty()) throw InvalidArgumentError("simplex has no vertices");
  const int n = static_cast<int>(vertices.front().size());
  check_dimension(n);
  if (static_cast<int>(vertices.size()) != n + 1) {
    throw InvalidArgumentError("an n-simplex needs exactly n+1 vertices");
  }
  for (const auto& v : vertices) {
    if (v.size() != n) throw InvalidArgumentError("vertices have mismatched dimensions");
  }
  if (affine_rank(vertices, tolerance) != n) {
    throw DegenerateInputError("simplex vertices are affinely dependent");
  }

  // Rows of the inverse barycentric matrix are the affine functionals lambda_i;
  // lambda_i >= 0 is the facet opposite vertex i.
  Eigen::MatrixXd lifted(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    lifted.col(i).head(n) = vertices[static_cast<std::size_t>(i)];
    lifted(n, i) = 1.0;
  }
  const Eigen::MatrixXd bary = lifted.inverse();
  std::vector<HalfSpace> halfspaces;
  halfspaces.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    HalfSpace h;
    h.normal = -bary.row(i).head(n).transpose();
    h.offset = bary(i, n);
    halfspaces.push_back(std::move(h));
  }
  return build_polytope(std::move(vertices), std::move(halfspaces), tolerance);
}

long euler_characteristic(const ConvexPolytope& polytope) {
  long chi = 0;
  for (int k = 0; k < polytope.dim(); ++k) {
    const long count = static_cast<long>(polytope.face_count(k));
    chi += (k % 2 == 0) ? count : -count;
  }
  return chi;
}

}  // namespace polyangle
