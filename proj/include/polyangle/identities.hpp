#pragma once

#include <span>
#include <string>
#include <vector>

#include "polyangle/geometry.hpp"
#include "polyangle/projection.hpp"
#include "polyangle/solid_angle.hpp"

namespace polyangle {

/// Sum of solid angles over faces of one dimension.
struct AngleSum {
  double value = 0.0;
  double std_error = 0.0;  // combined over faces; zero for closed forms
  bool monte_carlo = false;
};

/// Sum of alpha(F) over the k-faces. Monte Carlo faces draw independent
/// streams derived from options.mc.seed and the face's lattice index.
AngleSum angle_sum(const ConvexPolytope& polytope, int k, const AngleOptions& options = {});

/// 2/(n omega_n) times the vertex angle sum of a simplex.
struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};
Estimate predict_simplex_probability(const ConvexPolytope& simplex, const AngleOptions& options = {});

/// One numerical identity: lhs against rhs.
struct IdentityCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double lhs_std_error = 0.0;
  double rhs_std_error = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string method;
};

/// Residual |lhs - rhs| judged against max(base_tolerance, 4 * combined std error).
IdentityCheck make_check(std::string name, double lhs, double lhs_std_error, double rhs,
                         double rhs_std_error, double base_tolerance, std::string method);

/// Projection frequency of simplex shadows against the vertex angle sum.
/// The projection run and the angle estimates use streams derived from mc.seed.
IdentityCheck check_simplex_probability(const ConvexPolytope& simplex, const McOptions& mc,
                              MethodChoice method = MethodChoice::Auto,
                              double base_tolerance = kDefaultTolerance);

/// Sum of polygon angles equals pi (f_0 - 2).
IdentityCheck check_polygon_identity(const ConvexPolytope& polygon,
                                     double base_tolerance = kDefaultTolerance);

/// (Sum vertex angles - sum edge angles) / 2pi equals 2 - f_2 in R^3.
IdentityCheck check_polyhedron_identity(const ConvexPolytope& polyhedron,
                                        double base_tolerance = kDefaultTolerance);

/// Alternating angle sum over all proper faces equals (-1)^{n-1} n omega_n.
IdentityCheck check_gram_euler(const ConvexPolytope& polytope, const AngleOptions& options = {},
                               double base_tolerance = kDefaultTolerance);

/// Vertex angle sum of a simplex lies strictly inside (0, n omega_n / 2).
IdentityCheck check_gaddum_bounds(const ConvexPolytope& simplex, const AngleOptions& options = {});

/// Boundary Euler relation on the computed lattice.
IdentityCheck check_euler_relation(const ConvexPolytope& polytope);

enum class TetraFamily { FlatApex, SkewSegments };

std::string_view to_string(TetraFamily family);

/// Unit equilateral triangle in z = 0 plus an apex at height h over its centroid.
ConvexPolytope flat_apex_tetrahedron(double height);

/// Hull of two orthogonal unit segments at z = +-d/2, centered on the z axis.
ConvexPolytope skew_segments_tetrahedron(double distance);

ConvexPolytope make_family_member(TetraFamily family, double parameter);

struct ScanPoint {
  double parameter = 0.0;
  double probability = 0.0;  // predicted p for the member
  double angle_sum = 0.0;
  double std_error = 0.0;
};

std::vector<ScanPoint> gaddum_scan(TetraFamily family, std::span<const double> parameters,
                                   const AngleOptions& options = {});

/// `steps` log-spaced values from `from` to `to` inclusive.
std::vector<double> log_grid(double from, double to, int steps);

}  // namespace polyangle
