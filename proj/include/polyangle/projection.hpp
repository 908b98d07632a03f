#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyangle/geometry.hpp"
#include "polyangle/sampling.hpp"
#include "polyangle/solid_angle.hpp"

namespace polyangle {

enum class SimplexClass { LowerSimplex, NotSimplex, Degenerate };

std::string_view to_string(SimplexClass c);

/// Shadow of a simplex along one direction.
struct ProjectionOutcome {
  Vector direction;
  SimplexClass simplex_class = SimplexClass::Degenerate;
  std::optional<int> interior_vertex;
  // surviving_faces[k][i]: whether the i-th k-face is still a face of the
  // shadow. classify_simplex_projection fills dimension 0 only.
  std::vector<std::vector<bool>> surviving_faces;
};

/// Outcome of a face survival test. Degenerate marks directions inside the
/// tolerance band (a measure-zero set).
enum class Survival { Survives, Pierced, Degenerate };

/// Result of a sampling experiment.
struct ExperimentReport {
  std::string name;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;     // requested directions
  std::uint64_t degenerate = 0;  // excluded from the estimate
  std::uint64_t rejected = 0;    // NotSimplex count for simplex runs
  unsigned workers = 1;
  double estimate = 0.0;
  double std_error = 0.0;
  std::optional<double> prediction;
  double prediction_std_error = 0.0;
  std::optional<double> residual;  // |estimate - prediction|
  double runtime_seconds = 0.0;

  void set_prediction(double value, double value_std_error);
};

/// Orthonormal basis of u's orthogonal complement as the columns of an
/// n x (n-1) matrix. Completion pivots on u's largest coordinate.
Eigen::MatrixXd complement_basis(const Vector& u);

/// Vertex images in the basis of complement_basis(u).
std::vector<Vector> project(const ConvexPolytope& polytope, const Vector& u);

ProjectionOutcome classify_simplex_projection(const ConvexPolytope& simplex, const Vector& u);

Survival face_survival(const ConvexPolytope& polytope, const Face& face, const Vector& u);

/// False iff the line through F's centroid along u meets the interior of P.
/// Degenerate directions count as surviving.
bool face_survives(const ConvexPolytope& polytope, const Face& face, const Vector& u);

/// Fraction of directions whose shadow is an (n-1)-simplex. No prediction is set.
ExperimentReport estimate_simplex_probability(const ConvexPolytope& simplex, const McOptions& options);

/// Mean number of k-faces of P that survive projection, with the angle-based
/// prediction f_k - 2/(n omega_n) * sum of alpha over k-faces.
ExperimentReport estimate_expected_face_count(const ConvexPolytope& polytope, int k,
                                              const McOptions& options,
                                              const AngleOptions& prediction_angles = {});

}  // namespace polyangle
