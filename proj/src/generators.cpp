#include "polyangle/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polyangle {

ConvexPolytope regular_simplex(int n) {
  if (n < kMinDimension || n > kMaxDimension) {
    throw InvalidArgumentError("regular_simplex: unsupported dimension");
  }
  // Helmert basis of the hyperplane sum(x) = 0 in R^{n+1}.
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(n + 1, n);
  for (int k = 0; k < n; ++k) {
    const double norm = std::sqrt(static_cast<double>((k + 1) * (k + 2)));
    for (int j = 0; j <= k; ++j) basis(j, k) = 1.0 / norm;
    basis(k + 1, k) = -(k + 1) / norm;
  }
  std::vector<Vector> vertices;
  const double center = 1.0 / (n + 1);
  for (int i = 0; i <= n; ++i) {
    Vector e = Vector::Constant(n + 1, -center);
    e(i) += 1.0;
    vertices.push_back(basis.transpose() * e / std::numbers::sqrt2);
  }
  return build_simplex(std::move(vertices));
}

ConvexPolytope cube(int n) {
  if (n < kMinDimension || n > kMaxDimension) throw InvalidArgumentError("cube: unsupported dimension");
  std::vector<Vector> vertices;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = (mask >> i) & 1u ? 1.0 : 0.0;
    vertices.push_back(std::move(v));
  }
  std::vector<HalfSpace> halfspaces;
  for (int i = 0; i < n; ++i) {
    Vector lower = Vector::Zero(n);
    lower(i) = -1.0;
    halfspaces.push_back({lower, 0.0});
    Vector upper = Vector::Zero(n);
    upper(i) = 1.0;
    halfspaces.push_back({upper, 1.0});
  }
  return build_polytope(std::move(vertices), std::move(halfspaces));
}

namespace {

// Counter-clockwise points in convex position.
ConvexPolytope polygon_from_ccw(std::vector<Vector> points) {
  std::vector<HalfSpace> halfspaces;
  const std::size_t m = points.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Vector& a = points[i];
    const Vector& b = points[(i + 1) % m];
    Vector normal(2);
    normal << b(1) - a(1), a(0) - b(0);
    normal.normalize();
    halfspaces.push_back({normal, normal.dot(a)});
  }
  return build_polytope(std::move(points), std::move(halfspaces));
}

}  // namespace

ConvexPolytope regular_polygon(int m) {
  if (m < 3) throw InvalidArgumentError("regular_polygon: need at least 3 vertices");
  std::vector<Vector> points;
  for (int i = 0; i < m; ++i) {
    const double t = 2.0 * std::numbers::pi * i / m;
    Vector p(2);
    p << std::cos(t), std::sin(t);
    points.push_back(std::move(p));
  }
  return polygon_from_ccw(std::move(points));
}

ConvexPolytope random_polygon(int m, std::uint64_t seed) {
  if (m < 3) throw InvalidArgumentError("random_polygon: need at least 3 vertices");
  Rng rng(derive_seed(seed, 0x706f6c79));
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double min_gap = 0.1 * std::numbers::pi / m;
  for (;;) {
    std::vector<double> t(static_cast<std::size_t>(m));
    for (double& x : t) x = angle(rng);
    std::sort(t.begin(), t.end());
    double gap = t.front() + 2.0 * std::numbers::pi - t.back();
    for (std::size_t i = 1; i < t.size(); ++i) gap = std::min(gap, t[i] - t[i - 1]);
    // Keep the origin well inside so the polygon is not a sliver.
    double widest = t.front() + 2.0 * std::numbers::pi - t.back();
    for (std::size_t i = 1; i < t.size(); ++i) widest = std::max(widest, t[i] - t[i - 1]);
    if (gap < min_gap || widest > 0.95 * std::numbers::pi) continue;
    std::vector<Vector> points;
    for (double x : t) {
      Vector p(2);
      p << std::cos(x), std::sin(x);
      points.push_back(std::move(p));
    }
    return polygon_from_ccw(std::move(points));
  }
}

ConvexPolytope random_simplex(int n, std::uint64_t seed) {
  if (n < kMinDimension || n > kMaxDimension) {
    throw InvalidArgumentError("random_simplex: unsupported dimension");
  }
  Rng rng(derive_seed(seed, 0x73696d70));
  std::normal_distribution<double> gauss;
  for (;;) {
    std::vector<Vector> vertices;
    Eigen::MatrixXd diffs(n, n);
    for (int i = 0; i <= n; ++i) {
      Vector v(n);
      for (int j = 0; j < n; ++j) v(j) = gauss(rng);
      if (i > 0) diffs.row(i - 1) = (v - vertices.front()).transpose();
      vertices.push_back(std::move(v));
    }
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(diffs).singularValues();
    if (sv(n - 1) < 0.05 * sv(0)) continue;
    return build_simplex(std::move(vertices));
  }
}

ConvexPolytope corner_simplex(int n) {
  std::vector<Vector> vertices{Vector::Zero(n)};
  for (int i = 0; i < n; ++i) vertices.push_back(Vector::Unit(n, i));
  return build_simplex(std::move(vertices));
}

Eigen::MatrixXd random_rotation(int n, Rng& rng) {
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  }
  if (q.determinant() < 0) q.col(0) = -q.col(0);
  return q;
}

ConvexPolytope transform(const ConvexPolytope& polytope, const Eigen::MatrixXd& rotation,
                         const Vector& shift) {
  std::vector<Vector> vertices;
  for (const auto& v : polytope.vertices()) vertices.push_back(rotation * v + shift);
  std::vector<HalfSpace> halfspaces;
  for (const auto& h : polytope.halfspaces()) {
    Vector normal = rotation * h.normal;
    const double offset = h.offset + normal.dot(shift);
    halfspaces.push_back({std::move(normal), offset});
  }
  return build_polytope(std::move(vertices), std::move(halfspaces), polytope.tolerance());
}

ConvexPolytope scale(const ConvexPolytope& polytope, double factor) {
  if (!(factor > 0.0)) throw InvalidArgumentError("scale factor must be positive");
  std::vector<Vector> vertices;
  for (const auto& v : polytope.vertices()) vertices.push_back(factor * v);
  std::vector<HalfSpace> halfspaces;
  for (const auto& h : polytope.halfspaces()) halfspaces.push_back({h.normal, factor * h.offset});
  return build_polytope(std::move(vertices), std::move(halfspaces), polytope.tolerance());
}

}  // namespace polyangle
