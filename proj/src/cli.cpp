#include "polyangle/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>

#include <CLI11.hpp>

#include "polyangle/generators.hpp"
#include "polyangle/identities.hpp"
#include "polyangle/polytope_io.hpp"
#include "polyangle/projection.hpp"

namespace polyangle::cli {

namespace {

template <class T>
T parse_number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    T value{};
    if constexpr (std::is_same_v<T, double>) {
      value = std::stod(text, &used);
    } else if constexpr (std::is_same_v<T, std::uint64_t>) {
      if (!text.empty() && text.front() == '-') throw std::invalid_argument(text);
      value = std::stoull(text, &used);
    } else {
      value = static_cast<T>(std::stol(text, &used));
    }
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::logic_error&) {
    throw UsageError("--builtin " + what + ": cannot parse '" + text + "'");
  }
}

McOptions mc_of(const RunConfig& config) { return {config.samples, config.seed, config.workers}; }

AngleOptions angles_of(const RunConfig& config, std::uint64_t stream) {
  return {config.method, {config.samples, derive_seed(config.seed, stream), config.workers}};
}

Record summary(const RunConfig& config, bool passed) {
  Record r("summary");
  r.field("command", config.command)
      .field("seed", config.seed)
      .field("samples", config.samples)
      .field("workers", config.workers)
      .field("method", to_string(config.method))
      .field("tolerance", config.tolerance)
      .field("passed", passed);
  return r;
}

Record check_record(const IdentityCheck& c) {
  Record r("check");
  r.field("name", c.name)
      .field("lhs", c.lhs)
      .field("rhs", c.rhs)
      .field("lhs_stderr", c.lhs_std_error)
      .field("rhs_stderr", c.rhs_std_error)
      .field("residual", c.residual)
      .field("tolerance", c.tolerance)
      .field("method", c.method)
      .field("passed", c.passed);
  return r;
}

Record experiment_record(const ExperimentReport& e, double tolerance, bool passed) {
  Record r("experiment");
  r.field("name", e.name)
      .field("seed", e.seed)
      .field("samples", e.samples)
      .field("degenerate", e.degenerate)
      .field("not_simplex", e.rejected)
      .field("estimate", e.estimate)
      .field("stderr", e.std_error)
      .field("prediction", e.prediction.value_or(std::numeric_limits<double>::quiet_NaN()))
      .field("prediction_stderr", e.prediction_std_error)
      .field("residual", e.residual.value_or(std::numeric_limits<double>::quiet_NaN()))
      .field("tolerance", tolerance)
      .field("passed", passed);
  return r;
}

std::optional<TetraFamily> parse_family(const std::string& name) {
  if (name == "flat-apex" || name == "flat") return TetraFamily::FlatApex;
  if (name == "skew" || name == "skew-segments") return TetraFamily::SkewSegments;
  return std::nullopt;
}

}  // namespace

ConvexPolytope make_builtin(const std::vector<std::string>& spec, double tolerance) {
  if (spec.empty()) throw UsageError("--builtin needs a generator name");
  const std::string& name = spec[0];
  auto arg = [&](std::size_t i) -> std::optional<std::string> {
    return i < spec.size() ? std::optional<std::string>(spec[i]) : std::nullopt;
  };
  auto dim_arg = [&](std::size_t i, int fallback) {
    const auto a = arg(i);
    return a ? parse_number<int>(*a, name) : fallback;
  };
  auto need = [&](std::size_t i) {
    const auto a = arg(i);
    if (!a) throw UsageError("--builtin " + name + " needs an argument");
    return *a;
  };

  ConvexPolytope p = [&] {
    if (name == "cube") return cube(dim_arg(1, 3));
    if (name == "regular-simplex") return regular_simplex(dim_arg(1, 3));
    if (name == "corner-simplex") return corner_simplex(dim_arg(1, 3));
    if (name == "flat-apex") return flat_apex_tetrahedron(parse_number<double>(need(1), name));
    if (name == "skew" || name == "skew-segments") {
      return skew_segments_tetrahedron(parse_number<double>(need(1), name));
    }
    if (name == "random-simplex") {
      return random_simplex(dim_arg(2, 3), parse_number<std::uint64_t>(need(1), name));
    }
    if (name == "regular-polygon") return regular_polygon(dim_arg(1, 6));
    if (name == "random-polygon") {
      return random_polygon(dim_arg(2, 6), parse_number<std::uint64_t>(need(1), name));
    }
    throw UsageError("unknown --builtin generator '" + name + "'");
  }();
  if (tolerance != p.tolerance()) {
    return build_polytope(p.vertices(), p.halfspaces(), tolerance);
  }
  return p;
}

ConvexPolytope load_input(const RunConfig& config) {
  const bool has_file = !config.input.empty();
  const bool has_builtin = !config.builtin.empty();
  if (has_file == has_builtin) throw UsageError("give exactly one of an input file or --builtin");
  return has_builtin ? make_builtin(config.builtin, config.tolerance)
                     : load_polytope(config.input, config.tolerance);
}

CommandResult cmd_angles(const RunConfig& config) {
  const ConvexPolytope p = load_input(config);
  const AngleOptions base{config.method, mc_of(config)};
  CommandResult result;
  for (int k = 0; k < p.dim(); ++k) {
    double raw_sum = 0.0, norm_sum = 0.0, variance = 0.0;
    const auto faces = p.faces_of_dim(k);
    for (std::size_t i = 0; i < faces.size(); ++i) {
      const Face& face = faces[i];
      AngleOptions options = base;
      options.mc.seed = derive_seed(config.seed, static_cast<std::uint64_t>(&face - p.faces().data()));
      const SolidAngleMeasure m = solid_angle(p, face, options);
      raw_sum += m.raw;
      norm_sum += m.normalized;
      variance += m.std_error * m.std_error;
      Record r("angle");
      r.field("dim", k)
          .field("face", static_cast<std::uint64_t>(i))
          .field("vertices", face.vertex_ids)
          .field("raw", m.raw)
          .field("normalized", m.normalized)
          .field("stderr", m.std_error)
          .field("method", to_string(m.method));
      result.records.push_back(std::move(r));
    }
    Record total("angle-total");
    total.field("dim", k)
        .field("count", static_cast<std::uint64_t>(faces.size()))
        .field("raw_sum", raw_sum)
        .field("normalized_sum", norm_sum)
        .field("stderr", std::sqrt(variance));
    result.records.push_back(std::move(total));
  }
  return result;
}

CommandResult cmd_simulate(const RunConfig& config) {
  const ConvexPolytope p = load_input(config);
  CommandResult result;
  ExperimentReport report;
  if (config.k) {
    report = estimate_expected_face_count(p, *config.k, mc_of(config), angles_of(config, 1));
  } else {
    if (!p.is_simplex()) throw UsageError("simulate: non-simplex input needs --k");
    McOptions projection = mc_of(config);
    projection.seed = derive_seed(config.seed, 0);
    report = estimate_simplex_probability(p, projection);
    const Estimate prediction = predict_simplex_probability(p, angles_of(config, 1));
    report.set_prediction(prediction.value, prediction.std_error);
    report.seed = config.seed;
  }
  const IdentityCheck check =
      make_check(report.name, report.estimate, report.std_error, *report.prediction,
                 report.prediction_std_error, config.tolerance, "");
  result.passed = check.passed;
  Record r = experiment_record(report, check.tolerance, check.passed);
  if (config.timing) r.field("runtime_seconds", report.runtime_seconds);
  result.records.push_back(std::move(r));
  return result;
}

CommandResult cmd_verify(const RunConfig& config) {
  const ConvexPolytope p = load_input(config);
  const int n = p.dim();
  std::vector<IdentityCheck> checks;
  std::uint64_t index = 0;
  auto next_angles = [&] {
    AngleOptions options{config.method, mc_of(config)};
    options.mc.seed = config.seed + index++;
    return options;
  };

  checks.push_back(check_euler_relation(p));
  if (n == 2) checks.push_back(check_polygon_identity(p, config.tolerance));
  if (n == 3) checks.push_back(check_polyhedron_identity(p, config.tolerance));
  checks.push_back(check_gram_euler(p, next_angles(), config.tolerance));
  if (p.is_simplex()) {
    const AngleOptions options = next_angles();
    checks.push_back(check_simplex_probability(p, options.mc, config.method, config.tolerance));
    if (n >= 3) checks.push_back(check_gaddum_bounds(p, next_angles()));
  }

  CommandResult result;
  for (const auto& c : checks) {
    result.passed = result.passed && c.passed;
    result.records.push_back(check_record(c));
  }
  return result;
}

CommandResult cmd_scan(const RunConfig& config) {
  const auto family = parse_family(config.family);
  if (!family) throw UsageError("--family must be flat-apex or skew");
  if (config.steps < 1) throw UsageError("--steps must be at least 1");
  const double from = config.from.value_or(1e-3);
  const double to = config.to.value_or(*family == TetraFamily::FlatApex ? 10.0 : 1.0);
  if (!(from > 0.0) || !(to > 0.0)) throw UsageError("--from and --to must be positive");

  const auto grid = log_grid(from, to, config.steps);
  const auto points = gaddum_scan(*family, grid, {config.method, mc_of(config)});
  CommandResult result;
  for (const auto& pt : points) {
    const bool inside = pt.probability > 0.0 && pt.probability < 1.0;
    result.passed = result.passed && inside;
    Record r("scan");
    r.field("family", to_string(*family))
        .field("parameter", pt.parameter)
        .field("probability", pt.probability)
        .field("angle_sum", pt.angle_sum)
        .field("stderr", pt.std_error)
        .field("inside_bounds", inside);
    result.records.push_back(std::move(r));
  }
  return result;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solid angles of convex polytopes and random projection experiments", "polyangle"};
  app.require_subcommand(1);
  RunConfig config;
  std::string method_name = "auto";

  const std::map<std::string, MethodChoice> methods{
      {"auto", MethodChoice::Auto}, {"exact", MethodChoice::Exact}, {"mc", MethodChoice::MonteCarlo}};

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) {
      sub->add_option("input", config.input, "Polytope file (JSON)");
      sub->add_option("--builtin", config.builtin,
                      "Generator: cube N | regular-simplex N | corner-simplex N | flat-apex H | "
                      "skew D | random-simplex SEED [N] | regular-polygon M | random-polygon SEED [M]")
          ->expected(1, 3);
    }
    sub->add_option("--samples", config.samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "Root random seed");
    sub->add_option("--tolerance", config.tolerance, "Incidence / degeneracy tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--method", method_name, "Angle method: auto, exact, mc")
        ->check(CLI::IsMember({"auto", "exact", "mc"}, CLI::ignore_case));
    sub->add_option("--workers", config.workers, "Parallel sampling workers")->check(CLI::PositiveNumber);
    sub->add_option("--out", config.out, "Write the report here instead of standard output");
    sub->add_flag("--timing", config.timing, "Include wall-clock runtime in the report");
  };

  auto* angles = app.add_subcommand("angles", "Solid angle at every proper face");
  add_common(angles, true);
  auto* simulate = app.add_subcommand("simulate", "Random projection experiment");
  add_common(simulate, true);
  simulate->add_option("--k", config.k, "Face dimension for the expected face count");
  auto* verify = app.add_subcommand("verify", "Run every applicable angle identity");
  add_common(verify, true);
  auto* scan = app.add_subcommand("scan", "Vertex angle sums along a degenerating tetrahedron family");
  add_common(scan, false);
  scan->add_option("--family", config.family, "flat-apex or skew");
  scan->add_option("--from", config.from, "First parameter value");
  scan->add_option("--to", config.to, "Last parameter value");
  scan->add_option("--steps", config.steps, "Number of log-spaced grid points");

  std::vector<const char*> argv{"polyangle"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }
  config.method = methods.at(CLI::detail::to_lower(method_name));

  const auto start = std::chrono::steady_clock::now();
  CommandResult result;
  try {
    if (angles->parsed()) {
      config.command = "angles";
      result = cmd_angles(config);
    } else if (simulate->parsed()) {
      config.command = "simulate";
      result = cmd_simulate(config);
    } else if (verify->parsed()) {
      config.command = "verify";
      result = cmd_verify(config);
    } else {
      config.command = "scan";
      result = cmd_scan(config);
    }
  } catch (const ParseError& e) {
    err << "polyangle: " << e.what() << "\n";
    return kUsageError;
  } catch (const GeometryError& e) {
    err << "polyangle: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "polyangle: " << e.what() << "\n";
    return kUsageError;
  }

  Record tail = summary(config, result.passed);
  if (config.timing) {
    tail.field("runtime_seconds",
               std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  result.records.push_back(std::move(tail));

  std::ofstream file;
  if (!config.out.empty()) {
    file.open(config.out);
    if (!file) {
      err << "polyangle: cannot write '" << config.out << "'\n";
      return kUsageError;
    }
  }
  std::ostream& sink = config.out.empty() ? out : file;
  for (const auto& r : result.records) sink << r << "\n";
  sink.flush();
  return result.passed ? kOk : kCheckFailed;
}

}  // namespace polyangle::cli
