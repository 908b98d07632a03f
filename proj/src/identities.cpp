#include "polyangle/identities.hpp"

#include <cmath>
#include <numbers>

namespace polyangle {

namespace {

std::size_t face_index(const ConvexPolytope& polytope, const Face& face) {
  return static_cast<std::size_t>(&face - polytope.faces().data());
}

AngleOptions stream_for(const AngleOptions& options, std::uint64_t stream) {
  AngleOptions out = options;
  out.mc.seed = derive_seed(options.mc.seed, stream);
  return out;
}

std::string method_label(const AngleSum& sum) { return sum.monte_carlo ? "monte-carlo" : "exact"; }

}  // namespace

AngleSum angle_sum(const ConvexPolytope& polytope, int k, const AngleOptions& options) {
  if (k < 0 || k >= polytope.dim()) throw InvalidArgumentError("angle_sum: k must lie in [0, n-1]");
  AngleSum sum;
  double variance = 0.0;
  for (const Face& face : polytope.faces_of_dim(k)) {
    const auto measure = solid_angle(polytope, face, stream_for(options, face_index(polytope, face)));
    sum.value += measure.raw;
    variance += measure.std_error * measure.std_error;
    sum.monte_carlo = sum.monte_carlo || measure.method == AngleMethod::MonteCarlo;
  }
  sum.std_error = std::sqrt(variance);
  return sum;
}

Estimate predict_simplex_probability(const ConvexPolytope& simplex, const AngleOptions& options) {
  if (!simplex.is_simplex()) throw InvalidArgumentError("predict_simplex_probability: not a simplex");
  const AngleSum sum = angle_sum(simplex, 0, options);
  const double scale = 2.0 / unit_sphere_area(simplex.dim());
  return {scale * sum.value, scale * sum.std_error};
}

IdentityCheck make_check(std::string name, double lhs, double lhs_std_error, double rhs,
                         double rhs_std_error, double base_tolerance, std::string method) {
  IdentityCheck check;
  check.name = std::move(name);
  check.lhs = lhs;
  check.rhs = rhs;
  check.lhs_std_error = lhs_std_error;
  check.rhs_std_error = rhs_std_error;
  check.residual = std::abs(lhs - rhs);
  const double combined = std::sqrt(lhs_std_error * lhs_std_error + rhs_std_error * rhs_std_error);
  check.tolerance = std::max(base_tolerance, 4.0 * combined);
  check.passed = std::isfinite(check.residual) && check.residual <= check.tolerance;
  check.method = std::move(method);
  return check;
}

IdentityCheck check_simplex_probability(const ConvexPolytope& simplex, const McOptions& mc, MethodChoice method,
                              double base_tolerance) {
  McOptions projection = mc;
  projection.seed = derive_seed(mc.seed, 0);
  AngleOptions angles{method, mc};
  angles.mc.seed = derive_seed(mc.seed, 1);

  const ExperimentReport estimate = estimate_simplex_probability(simplex, projection);
  const Estimate prediction = predict_simplex_probability(simplex, angles);
  return make_check("simplex-probability", estimate.estimate, estimate.std_error,
                    prediction.value, prediction.std_error, base_tolerance,
                    prediction.std_error > 0 ? "projection-mc vs angle-mc" : "projection-mc vs angle-exact");
}

IdentityCheck check_polygon_identity(const ConvexPolytope& polygon, double base_tolerance) {
  if (polygon.dim() != 2) throw InvalidArgumentError("check_polygon_identity: polygon required");
  const AngleSum sum = angle_sum(polygon, 0, {MethodChoice::Exact, {}});
  const double rhs = std::numbers::pi * (static_cast<double>(polygon.face_count(0)) - 2.0);
  return make_check("polygon-angle-sum", sum.value, 0.0, rhs, 0.0, base_tolerance, "exact");
}

IdentityCheck check_polyhedron_identity(const ConvexPolytope& polyhedron, double base_tolerance) {
  if (polyhedron.dim() != 3) throw InvalidArgumentError("check_polyhedron_identity: 3-polytope required");
  const AngleSum vertices = angle_sum(polyhedron, 0, {MethodChoice::Exact, {}});
  const AngleSum edges = angle_sum(polyhedron, 1, {MethodChoice::Exact, {}});
  const double two_pi = 2.0 * std::numbers::pi;
  const double lhs = vertices.value / two_pi - edges.value / two_pi;
  const double rhs = 2.0 - static_cast<double>(polyhedron.face_count(2));
  return make_check("polyhedron-vertex-edge-identity", lhs, 0.0, rhs, 0.0, base_tolerance, "exact");
}

IdentityCheck check_gram_euler(const ConvexPolytope& polytope, const AngleOptions& options,
                               double base_tolerance) {
  const int n = polytope.dim();
  double lhs = 0.0;
  double variance = 0.0;
  bool monte_carlo = false;
  for (int k = 0; k < n; ++k) {
    AngleSum sum;
    if (k == n - 1 && n <= 3) {
      sum.value = static_cast<double>(polytope.face_count(k)) * 0.5 * unit_sphere_area(n);
    } else {
      sum = angle_sum(polytope, k, options);
    }
    lhs += (k % 2 == 0 ? 1.0 : -1.0) * sum.value;
    variance += sum.std_error * sum.std_error;
    monte_carlo = monte_carlo || sum.monte_carlo;
  }
  const double rhs = (n % 2 == 1 ? 1.0 : -1.0) * unit_sphere_area(n);
  return make_check("gram-euler", lhs, std::sqrt(variance), rhs, 0.0, base_tolerance,
                    monte_carlo ? "monte-carlo" : "exact");
}

IdentityCheck check_gaddum_bounds(const ConvexPolytope& simplex, const AngleOptions& options) {
  if (!simplex.is_simplex()) throw InvalidArgumentError("check_gaddum_bounds: not a simplex");
  const AngleSum sum = angle_sum(simplex, 0, options);
  const double upper = 0.5 * unit_sphere_area(simplex.dim());
  IdentityCheck check;
  check.name = "gaddum-bounds";
  check.lhs = sum.value;
  check.lhs_std_error = sum.std_error;
  check.rhs = upper;
  check.residual = sum.value <= 0.0 ? -sum.value : (sum.value >= upper ? sum.value - upper : 0.0);
  check.tolerance = 0.0;
  check.passed = sum.value > 0.0 && sum.value < upper;
  check.method = method_label(sum);
  return check;
}

IdentityCheck check_euler_relation(const ConvexPolytope& polytope) {
  const double lhs = static_cast<double>(euler_characteristic(polytope));
  const double rhs = 1.0 + (polytope.dim() % 2 == 1 ? 1.0 : -1.0);
  return make_check("euler-relation", lhs, 0.0, rhs, 0.0, 0.0, "exact");
}

std::string_view to_string(TetraFamily family) {
  return family == TetraFamily::FlatApex ? "flat-apex" : "skew-segments";
}

ConvexPolytope flat_apex_tetrahedron(double height) {
  if (!(height > 0.0) || !std::isfinite(height)) {
    throw InvalidArgumentError("flat-apex height must be positive");
  }
  const double r3 = std::sqrt(3.0);
  std::vector<Vector> v(4, Vector(3));
  v[0] << 0.0, 0.0, 0.0;
  v[1] << 1.0, 0.0, 0.0;
  v[2] << 0.5, r3 / 2.0, 0.0;
  v[3] << 0.5, r3 / 6.0, height;
  return build_simplex(std::move(v));
}

ConvexPolytope skew_segments_tetrahedron(double distance) {
  if (!(distance > 0.0) || !std::isfinite(distance)) {
    throw InvalidArgumentError("skew-segments distance must be positive");
  }
  std::vector<Vector> v(4, Vector(3));
  v[0] << -0.5, 0.0, distance / 2.0;
  v[1] << 0.5, 0.0, distance / 2.0;
  v[2] << 0.0, -0.5, -distance / 2.0;
  v[3] << 0.0, 0.5, -distance / 2.0;
  return build_simplex(std::move(v));
}

ConvexPolytope make_family_member(TetraFamily family, double parameter) {
  return family == TetraFamily::FlatApex ? flat_apex_tetrahedron(parameter)
                                         : skew_segments_tetrahedron(parameter);
}

std::vector<ScanPoint> gaddum_scan(TetraFamily family, std::span<const double> parameters,
                                   const AngleOptions& options) {
  std::vector<ScanPoint> points;
  points.reserve(parameters.size());
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    const ConvexPolytope member = make_family_member(family, parameters[i]);
    const AngleOptions member_options = stream_for(options, 1000 + i);
    const AngleSum sum = angle_sum(member, 0, member_options);
    const double scale = 2.0 / unit_sphere_area(3);
    points.push_back({parameters[i], scale * sum.value, sum.value, scale * sum.std_error});
  }
  return points;
}

std::vector<double> log_grid(double from, double to, int steps) {
  if (steps < 1) throw InvalidArgumentError("log_grid: steps must be at least 1");
  if (!(from > 0.0) || !(to > 0.0)) throw InvalidArgumentError("log_grid: bounds must be positive");
  std::vector<double> grid;
  if (steps == 1) return {from};
  const double a = std::log(from);
  const double b = std::log(to);
  for (int i = 0; i < steps; ++i) {
    grid.push_back(i == steps - 1 ? to : std::exp(a + (b - a) * i / (steps - 1)));
  }
  grid.front() = from;
  return grid;
}

}  // namespace polyangle
