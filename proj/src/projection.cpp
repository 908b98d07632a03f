#include "polyangle/projection.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "polyangle/identities.hpp"

namespace polyangle {

std::string_view to_string(SimplexClass c) {
  switch (c) {
    case SimplexClass::LowerSimplex: return "lower-simplex";
    case SimplexClass::NotSimplex: return "not-simplex";
    case SimplexClass::Degenerate: return "degenerate";
  }
  return "unknown";
}

void ExperimentReport::set_prediction(double value, double value_std_error) {
  prediction = value;
  prediction_std_error = value_std_error;
  residual = std::abs(estimate - value);
}

namespace {

constexpr int kMaxRows = kMaxDimension + 1;
using SmallMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxRows, kMaxRows>;
using SmallVector = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxRows, 1>;

void require_direction(const ConvexPolytope& polytope, const Vector& u) {
  if (u.size() != polytope.dim() || !is_unit(u)) {
    throw InvalidArgumentError("projection direction must be a unit vector in the ambient space");
  }
}

// Columns 0..n-2 of `basis` receive an orthonormal basis of u's complement.
void fill_complement_basis(std::span<const double> u, SmallMatrix& basis) {
  const int n = static_cast<int>(u.size());
  int pivot = 0;
  for (int i = 1; i < n; ++i) {
    if (std::abs(u[static_cast<std::size_t>(i)]) > std::abs(u[static_cast<std::size_t>(pivot)])) pivot = i;
  }
  SmallVector dir(n);
  for (int i = 0; i < n; ++i) dir(i) = u[static_cast<std::size_t>(i)];
  basis.resize(n, n - 1);
  int col = 0;
  for (int j = 0; j < n; ++j) {
    if (j == pivot) continue;
    SmallVector w = SmallVector::Zero(n);
    w(j) = 1.0;
    w -= dir(j) * dir;
    for (int c = 0; c < col; ++c) w -= basis.col(c).dot(w) * basis.col(c);
    basis.col(col++) = w / w.norm();
  }
}

// Barycentric test of every simplex vertex against the shadow of the others.
struct SimplexClassifier {
  const std::vector<Vector>& vertices;
  double tolerance;
  SmallMatrix basis;
  SmallMatrix images;  // (n-1) x (n+1)
  SmallMatrix system;
  SmallVector rhs;

  SimplexClass classify(std::span<const double> u, std::optional<int>& interior,
                        std::vector<bool>* vertex_survives) {
    const int n = static_cast<int>(u.size());
    fill_complement_basis(u, basis);
    images.resize(n - 1, n + 1);
    for (int i = 0; i <= n; ++i) {
      images.col(i) = basis.transpose() * vertices[static_cast<std::size_t>(i)];
    }
    bool degenerate = false;
    int count = 0;
    interior.reset();
    if (vertex_survives) vertex_survives->assign(static_cast<std::size_t>(n) + 1, true);
    system.resize(n, n);
    rhs.resize(n);
    for (int i = 0; i <= n; ++i) {
      int col = 0;
      for (int j = 0; j <= n; ++j) {
        if (j == i) continue;
        system.col(col).head(n - 1) = images.col(j);
        system(n - 1, col) = 1.0;
        ++col;
      }
      rhs.head(n - 1) = images.col(i);
      rhs(n - 1) = 1.0;
      Eigen::FullPivLU<SmallMatrix> lu(system);
      lu.setThreshold(tolerance);
      if (!lu.isInvertible()) {
        degenerate = true;
        continue;
      }
      const SmallVector coeffs = lu.solve(rhs);
      const double smallest = coeffs.minCoeff();
      if (smallest > tolerance) {
        ++count;
        interior = i;
        if (vertex_survives) (*vertex_survives)[static_cast<std::size_t>(i)] = false;
      } else if (smallest >= -tolerance) {
        degenerate = true;
      }
    }
    if (degenerate) return SimplexClass::Degenerate;
    if (count > 1) {
      throw std::logic_error("simplex shadow has more than one interior vertex");
    }
    return count == 1 ? SimplexClass::LowerSimplex : SimplexClass::NotSimplex;
  }
};

void require_simplex(const ConvexPolytope& simplex) {
  if (!simplex.is_simplex()) throw InvalidArgumentError("input polytope is not a simplex");
}

// Per-direction survival test for a fixed face, against precomputed a_i . u.
Survival survival_from_slopes(const ConvexPolytope& polytope, const std::vector<double>& slack,
                              std::span<const double> slope) {
  const double tol = polytope.tolerance();
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < slack.size(); ++i) {
    const double d = slope[i];
    if (slack[i] <= tol) {
      if (std::abs(d) <= tol) return Survival::Degenerate;
      if (d > 0) hi = std::min(hi, 0.0);
      else lo = std::max(lo, 0.0);
    } else if (d > 0) {
      hi = std::min(hi, slack[i] / d);
    } else if (d < 0) {
      lo = std::max(lo, slack[i] / d);
    }
  }
  return hi - lo > tol ? Survival::Pierced : Survival::Survives;
}

std::vector<double> centroid_slack(const ConvexPolytope& polytope, const Face& face) {
  std::vector<double> slack;
  for (const auto& h : polytope.halfspaces()) slack.push_back(h.offset - h.normal.dot(face.centroid));
  return slack;
}

template <class Clock = std::chrono::steady_clock>
double seconds_since(typename Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

Eigen::MatrixXd complement_basis(const Vector& u) {
  if (u.size() < 2 || !is_unit(u)) throw InvalidArgumentError("complement_basis: u must be a unit vector");
  SmallMatrix basis;
  fill_complement_basis(std::span<const double>(u.data(), static_cast<std::size_t>(u.size())), basis);
  return basis;
}

std::vector<Vector> project(const ConvexPolytope& polytope, const Vector& u) {
  require_direction(polytope, u);
  const Eigen::MatrixXd basis = complement_basis(u);
  std::vector<Vector> images;
  for (const auto& v : polytope.vertices()) images.push_back(basis.transpose() * v);
  return images;
}

ProjectionOutcome classify_simplex_projection(const ConvexPolytope& simplex, const Vector& u) {
  require_simplex(simplex);
  require_direction(simplex, u);
  SimplexClassifier classifier{simplex.vertices(), simplex.tolerance(), {}, {}, {}, {}};
  ProjectionOutcome outcome;
  outcome.direction = u;
  outcome.surviving_faces.resize(1);
  outcome.simplex_class = classifier.classify(
      std::span<const double>(u.data(), static_cast<std::size_t>(u.size())), outcome.interior_vertex,
      &outcome.surviving_faces[0]);
  if (outcome.simplex_class != SimplexClass::LowerSimplex) outcome.interior_vertex.reset();
  return outcome;
}

Survival face_survival(const ConvexPolytope& polytope, const Face& face, const Vector& u) {
  require_direction(polytope, u);
  polytope.require_face(face);
  std::vector<double> slope;
  for (const auto& h : polytope.halfspaces()) slope.push_back(h.normal.dot(u));
  return survival_from_slopes(polytope, centroid_slack(polytope, face), slope);
}

bool face_survives(const ConvexPolytope& polytope, const Face& face, const Vector& u) {
  return face_survival(polytope, face, u) != Survival::Pierced;
}

ExperimentReport estimate_simplex_probability(const ConvexPolytope& simplex, const McOptions& options) {
  require_simplex(simplex);
  if (options.samples == 0) throw InvalidArgumentError("experiment needs at least one sample");
  const auto start = std::chrono::steady_clock::now();
  const int n = simplex.dim();

  struct Counts {
    std::uint64_t lower = 0, other = 0, degenerate = 0;
    Counts& operator+=(const Counts& o) {
      lower += o.lower;
      other += o.other;
      degenerate += o.degenerate;
      return *this;
    }
  };
  const Counts counts = run_sharded<Counts>(options, [&](Rng& rng, std::uint64_t count, Counts& acc) {
    SimplexClassifier classifier{simplex.vertices(), simplex.tolerance(), {}, {}, {}, {}};
    std::array<double, kMaxDimension> u{};
    const std::span<double> view(u.data(), static_cast<std::size_t>(n));
    std::optional<int> interior;
    for (std::uint64_t s = 0; s < count; ++s) {
      fill_unit_sphere(rng, view);
      switch (classifier.classify(view, interior, nullptr)) {
        case SimplexClass::LowerSimplex: ++acc.lower; break;
        case SimplexClass::NotSimplex: ++acc.other; break;
        case SimplexClass::Degenerate: ++acc.degenerate; break;
      }
    }
  });

  ExperimentReport report;
  report.name = "simplex-probability";
  report.seed = options.seed;
  report.samples = options.samples;
  report.workers = options.workers;
  report.degenerate = counts.degenerate;
  report.rejected = counts.other;
  const double used = static_cast<double>(counts.lower + counts.other);
  if (used > 0) {
    const double p = static_cast<double>(counts.lower) / used;
    report.estimate = p;
    report.std_error = std::sqrt(p * (1.0 - p) / used);
  } else {
    report.estimate = std::numeric_limits<double>::quiet_NaN();
    report.std_error = std::numeric_limits<double>::quiet_NaN();
  }
  report.runtime_seconds = seconds_since(start);
  return report;
}

ExperimentReport estimate_expected_face_count(const ConvexPolytope& polytope, int k,
                                              const McOptions& options,
                                              const AngleOptions& prediction_angles) {
  const int n = polytope.dim();
  if (k < 0 || k > n - 2) {
    throw InvalidArgumentError("face count experiment needs 0 <= k <= n-2 (facets never survive as faces)");
  }
  if (options.samples == 0) throw InvalidArgumentError("experiment needs at least one sample");
  const auto start = std::chrono::steady_clock::now();
  const auto faces = polytope.faces_of_dim(k);
  std::vector<std::vector<double>> slack;
  for (const Face& f : faces) slack.push_back(centroid_slack(polytope, f));
  const auto& hs = polytope.halfspaces();

  struct Moments {
    std::uint64_t used = 0, degenerate = 0;
    double sum = 0.0, sum_sq = 0.0;
    Moments& operator+=(const Moments& o) {
      used += o.used;
      degenerate += o.degenerate;
      sum += o.sum;
      sum_sq += o.sum_sq;
      return *this;
    }
  };
  const Moments m = run_sharded<Moments>(options, [&](Rng& rng, std::uint64_t count, Moments& acc) {
    std::array<double, kMaxDimension> u{};
    const std::span<double> view(u.data(), static_cast<std::size_t>(n));
    std::vector<double> slope(hs.size());
    for (std::uint64_t s = 0; s < count; ++s) {
      fill_unit_sphere(rng, view);
      for (std::size_t i = 0; i < hs.size(); ++i) {
        double d = 0.0;
        for (int j = 0; j < n; ++j) d += hs[i].normal(j) * u[static_cast<std::size_t>(j)];
        slope[i] = d;
      }
      int survivors = 0;
      bool degenerate = false;
      for (const auto& face_slack : slack) {
        const Survival state = survival_from_slopes(polytope, face_slack, slope);
        if (state == Survival::Degenerate) {
          degenerate = true;
          break;
        }
        if (state == Survival::Survives) ++survivors;
      }
      if (degenerate) {
        ++acc.degenerate;
        continue;
      }
      ++acc.used;
      acc.sum += survivors;
      acc.sum_sq += static_cast<double>(survivors) * survivors;
    }
  });

  ExperimentReport report;
  report.name = "face-count-k" + std::to_string(k);
  report.seed = options.seed;
  report.samples = options.samples;
  report.workers = options.workers;
  report.degenerate = m.degenerate;
  if (m.used > 0) {
    const double used = static_cast<double>(m.used);
    const double mean = m.sum / used;
    const double var = m.used > 1 ? std::max(0.0, (m.sum_sq - used * mean * mean) / (used - 1.0)) : 0.0;
    report.estimate = mean;
    report.std_error = std::sqrt(var / used);
  } else {
    report.estimate = std::numeric_limits<double>::quiet_NaN();
    report.std_error = std::numeric_limits<double>::quiet_NaN();
  }

  const AngleSum angles = angle_sum(polytope, k, prediction_angles);
  const double scale = 2.0 / unit_sphere_area(n);
  report.set_prediction(static_cast<double>(faces.size()) - scale * angles.value, scale * angles.std_error);
  report.runtime_seconds = seconds_since(start);
  return report;
}

}  // namespace polyangle
