#pragma once

#include <cstdint>

#include "polyangle/geometry.hpp"
#include "polyangle/sampling.hpp"

namespace polyangle {

/// Regular n-simplex with unit edge length, centered at the origin.
ConvexPolytope regular_simplex(int n);

/// Unit cube [0,1]^n.
ConvexPolytope cube(int n);

/// Regular m-gon inscribed in the unit circle.
ConvexPolytope regular_polygon(int m);

/// Simplex with i.i.d. standard normal vertices; resampled until well conditioned.
ConvexPolytope random_simplex(int n, std::uint64_t seed);

/// Convex m-gon with vertices at random angles on the unit circle.
ConvexPolytope random_polygon(int m, std::uint64_t seed);

/// Simplex spanned by the origin and the standard basis vectors.
ConvexPolytope corner_simplex(int n);

/// Haar-random rotation (determinant +1).
Eigen::MatrixXd random_rotation(int n, Rng& rng);

/// x -> rotation * x + shift, applied to both representations; lattice recomputed.
ConvexPolytope transform(const ConvexPolytope& polytope, const Eigen::MatrixXd& rotation,
                         const Vector& shift);

/// x -> factor * x, factor > 0.
ConvexPolytope scale(const ConvexPolytope& polytope, double factor);

}  // namespace polyangle
