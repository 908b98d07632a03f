#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "polyangle/geometry.hpp"
#include "polyangle/sampling.hpp"

namespace polyangle {

/// How a solid angle value was obtained.
enum class AngleMethod {
  Exact2D,        // planar interior angle
  Exact3DVertex,  // spherical polygon area at a vertex of a 3-polytope
  Exact3DEdge,    // lune of the dihedral angle
  Facet,          // half-sphere, forced for every facet
  MonteCarlo,
};

std::string_view to_string(AngleMethod method);

/// Caller-side choice; Auto picks a closed form when one exists (n <= 3) and
/// Monte Carlo otherwise.
enum class MethodChoice { Auto, Exact, MonteCarlo };

std::string_view to_string(MethodChoice choice);

struct AngleOptions {
  MethodChoice method = MethodChoice::Auto;
  McOptions mc;
};

/// Measure of the solid inner angle at a face centroid.
struct SolidAngleMeasure {
  double raw = 0.0;         // surface measure on S^{n-1}
  double normalized = 0.0;  // raw / (n * omega_n)
  double std_error = 0.0;   // of raw; zero for closed forms
  AngleMethod method = AngleMethod::MonteCarlo;
};

/// Closed tangent cone of P at the centroid of F: {u : a_i . u <= 0 for every
/// halfspace i active at the centroid}. Precomputes the active normals.
class TangentCone {
 public:
  TangentCone(const ConvexPolytope& polytope, const Face& face);

  int dim() const { return dim_; }
  std::size_t active_count() const { return active_ids_.size(); }
  const std::vector<int>& active_ids() const { return active_ids_; }

  bool contains(std::span<const double> u) const;
  bool contains(const Vector& u) const {
    return contains(std::span<const double>(u.data(), static_cast<std::size_t>(u.size())));
  }

 private:
  int dim_;
  std::vector<int> active_ids_;
  std::vector<double> normals_;  // row-major, active_count x dim
};

/// Membership of unit direction u in the closed tangent cone at F's centroid.
bool tangent_cone_contains(const ConvexPolytope& polytope, const Face& face, const Vector& u);

SolidAngleMeasure solid_angle_exact_2d(const ConvexPolytope& polytope, const Face& vertex);
SolidAngleMeasure solid_angle_exact_3d_vertex(const ConvexPolytope& polytope, const Face& vertex);
SolidAngleMeasure solid_angle_exact_3d_edge(const ConvexPolytope& polytope, const Face& edge);

/// Half of the sphere, in any dimension.
SolidAngleMeasure solid_angle_facet(const ConvexPolytope& polytope, const Face& facet);

/// Hit-or-miss estimate over uniform directions.
SolidAngleMeasure solid_angle_mc(const ConvexPolytope& polytope, const Face& face,
                                 const McOptions& options);

/// True when a closed form exists for this face.
bool has_exact_angle(const ConvexPolytope& polytope, const Face& face);

/// Dispatches on options.method. Exact with no closed form available throws.
SolidAngleMeasure solid_angle(const ConvexPolytope& polytope, const Face& face,
                              const AngleOptions& options = {});

/// Probability that a random projection sends vertex v into the relative
/// interior of the shadow: 2 alpha(v) / (n omega_n).
double vertex_event_probability(const ConvexPolytope& polytope, const Face& vertex,
                                const AngleOptions& options = {});

/// Counts of sampled u with u in the cone and with -u in the cone.
struct ConeHits {
  std::uint64_t samples = 0;
  std::uint64_t forward = 0;
  std::uint64_t backward = 0;

  ConeHits& operator+=(const ConeHits& other) {
    samples += other.samples;
    forward += other.forward;
    backward += other.backward;
    return *this;
  }
};

ConeHits count_cone_hits(const ConvexPolytope& polytope, const Face& face, const McOptions& options);

}  // namespace polyangle
