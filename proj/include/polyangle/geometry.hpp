#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace polyangle {

using Vector = Eigen::VectorXd;

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr int kMinDimension = 2;
inline constexpr int kMaxDimension = 8;

/// Base class for every error raised by the library.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input points do not span the ambient space (zero-volume simplex or polytope).
class DegenerateInputError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// V- and H-representations disagree, or the lattice they induce is malformed.
class InconsistentPolytopeError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Argument violates a documented precondition (dimension, unit norm, face membership).
class InvalidArgumentError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Closed halfspace {x : normal . x <= offset}. Normals are stored with unit norm.
struct HalfSpace {
  Vector normal;
  double offset = 0.0;
};

/// A proper face, identified by its vertex set.
struct Face {
  int dim = 0;
  std::vector<int> vertex_ids;  // sorted ascending
  Vector centroid;
  std::vector<int> facet_ids;   // halfspaces whose boundary contains the face
};

/// Volume of the unit ball in R^n. The unit sphere's surface area is n times this.
double unit_ball_volume(int n);

/// Surface area of the unit sphere S^{n-1}.
double unit_sphere_area(int n);

/// Euclidean norm is 1 within 1e-12.
bool is_unit(const Vector& u);

/// Dimension of the affine hull of the given points (-1 for an empty set).
int affine_rank(std::span<const Vector> points, double tolerance = kDefaultTolerance);

/// Full-dimensional, bounded convex polytope holding V- and H-representations
/// together with its face lattice. Immutable once built.
class ConvexPolytope {
 public:
  int dim() const { return dim_; }
  double tolerance() const { return tolerance_; }
  const std::vector<Vector>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& halfspaces() const { return halfspaces_; }

  /// All proper faces, ordered by dimension and then by vertex set.
  const std::vector<Face>& faces() const { return faces_; }
  std::span<const Face> faces_of_dim(int k) const;
  std::size_t face_count(int k) const { return faces_of_dim(k).size(); }

  /// f_0 .. f_{n-1}.
  std::vector<std::size_t> f_vector() const;

  /// Index into faces() of the face with exactly these vertices.
  std::optional<std::size_t> find_face(std::vector<int> vertex_ids) const;

  /// Throws InvalidArgumentError unless `face` belongs to this polytope's lattice.
  void require_face(const Face& face) const;

  /// The face lattice entry of facet `halfspace_index`.
  const Face& facet(std::size_t halfspace_index) const;

  bool is_simplex() const { return static_cast<int>(vertices_.size()) == dim_ + 1; }

 private:
  friend ConvexPolytope build_polytope(std::vector<Vector>, std::vector<HalfSpace>, double);

  int dim_ = 0;
  double tolerance_ = kDefaultTolerance;
  std::vector<Vector> vertices_;
  std::vector<HalfSpace> halfspaces_;
  std::vector<Face> faces_;
  std::vector<std::size_t> dim_offsets_;        // faces of dim k: [offsets[k], offsets[k+1])
  std::vector<std::size_t> facet_face_index_;   // halfspace index -> faces() index
};

/// Builds an n-simplex from n+1 affinely independent points in R^n.
ConvexPolytope build_simplex(std::vector<Vector> vertices, double tolerance = kDefaultTolerance);

/// Builds a polytope from matching V- and H-representations. The face lattice
/// is derived from vertex-facet incidences; nothing is trusted from the caller.
ConvexPolytope build_polytope(std::vector<Vector> vertices, std::vector<HalfSpace> halfspaces,
                              double tolerance = kDefaultTolerance);

/// Sum_{k} (-1)^k f_k over proper faces; equals 1 + (-1)^{n-1} for any polytope.
long euler_characteristic(const ConvexPolytope& polytope);

}  // namespace polyangle
