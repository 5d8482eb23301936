#include "lieflow/geometry.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lieflow/expm.hpp"
#include "lieflow/format.hpp"

namespace lieflow {
namespace {

using clock_type = std::chrono::steady_clock;

double elapsed_ms(clock_type::time_point start) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

// Golden-section minimization of f on [lo, hi] down to width 1e-10.
template <typename F>
std::pair<double, double> golden_min(F&& f, double lo, double hi) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > 1e-10) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double t = 0.5 * (a + b);
  return {t, f(t)};
}

}  // namespace

const char* to_string(ReturnKind k) {
  switch (k) {
    case ReturnKind::fixed: return "fixed";
    case ReturnKind::periodic: return "periodic";
    case ReturnKind::no_return: return "no-return";
  }
  return "?";
}

MetricContext make_metric(AlgebraPtr algebra) {
  MetricContext ctx;
  ctx.gram = -algebra->killing_gram();
  for (const cplx& eig : eigenvalues(ctx.gram)) {
    if (eig.real() <= 0.0)
      fail(ErrorKind::InvalidArgument,
           "-killing_gram is not positive definite; " + algebra->name() + " is not compact type");
  }
  if (!algebra->trace_scale_valid())
    fail(ErrorKind::InvalidArgument, "no trace form proportionality for " + algebra->name());
  ctx.trace_scale = algebra->trace_scale();
  ctx.algebra = std::move(algebra);
  return ctx;
}

double killing_vector_norm(const MetricContext& ctx, const std::vector<double>& coords) {
  double q = 0.0;
  const std::size_t d = coords.size();
  for (std::size_t i = 0; i < d; ++i) {
    if (coords[i] == 0.0) continue;
    for (std::size_t j = 0; j < d; ++j) q += coords[i] * ctx.gram(i, j).real() * coords[j];
  }
  return std::sqrt(std::max(q, 0.0));
}

double riemannian_distance(const GroupElement& g, const GroupElement& h,
                           const MetricContext& ctx) {
  if (!same_group(g, h)) fail(ErrorKind::MixedGroups, "distance needs both points in one group");
  const Matrix u = g.matrix.conj_transpose() * h.matrix;
  const std::vector<cplx> eigs = eigenvalues(u);

  double min_dist_to_minus_one = 1e30;
  for (const cplx& lambda : eigs)
    min_dist_to_minus_one = std::min(min_dist_to_minus_one, std::abs(lambda + 1.0));

  if (min_dist_to_minus_one < 1e-3) {
    // cut-locus neighborhood: eigenangle form, exact for normal matrices
    double sum = 0.0;
    for (const cplx& lambda : eigs) {
      const double theta = std::arg(lambda);
      sum += theta * theta;
    }
    return std::sqrt(ctx.trace_scale * sum);
  }

  const Matrix log = mat_log_principal(u, eigs);
  double residual = 0.0;
  const std::vector<double> coords = ctx.algebra->expand(log, &residual);
  return killing_vector_norm(ctx, coords);
}

VerificationReport verify_isometry(const AlgebraElement& x, std::size_t trials, std::uint64_t seed,
                                   Exec exec) {
  const auto start = clock_type::now();
  const MetricContext ctx = make_metric(x.algebra);
  std::vector<double> deviations(trials, 0.0);

  parallel_for(trials, exec, [&](std::size_t i) {
    XorShift64Star rng = trial_rng(seed, i);
    const GroupElement g = random_group_element(x.algebra, rng);
    const GroupElement h = random_group_element(x.algebra, rng);
    const double t = rng.uniform(-10.0, 10.0);
    const GroupElement gt = linear_flow(x, g, t);
    const GroupElement ht = linear_flow(x, h, t);
    deviations[i] = std::abs(riemannian_distance(gt, ht, ctx) - riemannian_distance(g, h, ctx));
  });

  VerificationReport report;
  report.claim = "linear-flow-isometry";
  report.group = x.algebra->group_name();
  report.coefficients = x.coords;
  report.trials = trials;
  report.seed = seed;
  for (double dev : deviations) report.max_deviation = std::max(report.max_deviation, dev);
  report.pass = report.max_deviation < 1e-8;
  report.runtime_ms = elapsed_ms(start);
  return report;
}

VerificationReport verify_sphere_invariance(const AlgebraElement& x, const GroupElement& g,
                                            double t_max, std::size_t n, Exec exec) {
  const auto start = clock_type::now();
  const MetricContext ctx = make_metric(x.algebra);
  const GroupElement e = group_identity(x.algebra);
  const double radius = riemannian_distance(g, e, ctx);
  std::vector<double> deviations(n, 0.0);

  parallel_for(n, exec, [&](std::size_t i) {
    const double t = t_max * static_cast<double>(i) / static_cast<double>(n > 1 ? n - 1 : 1);
    const GroupElement gt = linear_flow(x, g, t);
    deviations[i] = std::abs(riemannian_distance(gt, e, ctx) - radius);
  });

  VerificationReport report;
  report.claim = "linear-flow-sphere-invariance";
  report.group = x.algebra->group_name();
  report.coefficients = x.coords;
  report.trials = n;
  for (double dev : deviations) report.max_deviation = std::max(report.max_deviation, dev);
  report.pass = report.max_deviation < 1e-8;
  report.runtime_ms = elapsed_ms(start);
  return report;
}

double default_return_tolerance(const AlgebraElement& x, FlowKind kind, const GroupElement& g,
                                double t_horizon) {
  const MetricContext ctx = make_metric(x.algebra);
  constexpr std::size_t kCoarse = 256;
  double diameter = 0.0;
  for (std::size_t i = 1; i <= kCoarse; ++i) {
    const double t = t_horizon * static_cast<double>(i) / kCoarse;
    diameter = std::max(diameter, riemannian_distance(flow_point(x, g, t, kind), g, ctx));
  }
  return std::max(1e-6 * diameter, 1e-9);
}

PeriodEstimate detect_period(const AlgebraElement& x, FlowKind kind, const GroupElement& g,
                             double t_horizon, double tol, Exec exec) {
  if (!(tol > 0.0)) fail(ErrorKind::InvalidTolerance, "detect_period needs tol > 0");
  if (!(t_horizon > 0.0)) fail(ErrorKind::InvalidArgument, "detect_period needs t_horizon > 0");

  const MetricContext ctx = make_metric(x.algebra);
  constexpr std::size_t kGrid = 10000;
  std::vector<double> dist(kGrid + 1, 0.0);
  const auto return_distance = [&](double t) {
    return riemannian_distance(flow_point(x, g, t, kind), g, ctx);
  };
  parallel_for(kGrid + 1, exec, [&](std::size_t i) {
    dist[i] = return_distance(t_horizon * static_cast<double>(i) / kGrid);
  });

  PeriodEstimate estimate;
  estimate.orbit_diameter = *std::max_element(dist.begin(), dist.end());
  estimate.scan_min = 1e30;
  for (std::size_t i = 1; i <= kGrid; ++i) estimate.scan_min = std::min(estimate.scan_min, dist[i]);

  if (estimate.orbit_diameter < tol) {
    estimate.kind = ReturnKind::fixed;
    return estimate;
  }

  const double step = t_horizon / kGrid;
  for (std::size_t i = 1; i <= kGrid; ++i) {
    const bool interior_min =
        i < kGrid ? (dist[i] <= dist[i - 1] && dist[i] <= dist[i + 1]) : (dist[i] <= dist[i - 1]);
    if (!interior_min || dist[i] >= tol) continue;
    const double lo = step * static_cast<double>(i - 1);
    const double hi = std::min(t_horizon, step * static_cast<double>(i + 1));
    const auto [t_star, f_star] = golden_min(return_distance, lo, hi);
    if (f_star < tol && t_star > 0.5 * step) {
      estimate.kind = ReturnKind::periodic;
      estimate.period = t_star;
      return estimate;
    }
  }
  estimate.kind = ReturnKind::no_return;
  return estimate;
}

OmegaLimitEstimate estimate_omega_limit(const AlgebraElement& x, const GroupElement& g,
                                        double t_tail_start, double t_tail_end, std::size_t n,
                                        Exec exec) {
  if (!(t_tail_end > t_tail_start) || !(t_tail_start > 0.0))
    fail(ErrorKind::InvalidArgument, "need t_tail_end > t_tail_start > 0");
  if (n < 1) fail(ErrorKind::InvalidArgument, "need at least one tail sample");

  const MetricContext ctx = make_metric(x.algebra);
  const GroupElement e = group_identity(x.algebra);
  const SpectralReport spectral = analyze_derivation(x);

  OmegaLimitEstimate estimate;
  estimate.seed = g;
  estimate.samples.resize(n);
  parallel_for(n, exec, [&](std::size_t i) {
    const double t =
        t_tail_start + (t_tail_end - t_tail_start) * static_cast<double>(i) / std::max<std::size_t>(n - 1, 1);
    estimate.samples[i] = linear_flow(x, g, t);
  });

  const double radius = riemannian_distance(g, e, ctx);
  for (const GroupElement& s : estimate.samples)
    estimate.sphere_deviation =
        std::max(estimate.sphere_deviation, std::abs(riemannian_distance(s, e, ctx) - radius));

  // fixed-point check on the samples: invariance under the flow at two
  // incommensurate times
  const double fixed_gate = 1e-8 * std::max(1.0, radius);
  for (const GroupElement& s : estimate.samples) {
    const double move = std::max(riemannian_distance(linear_flow(x, s, 0.7), s, ctx),
                                 riemannian_distance(linear_flow(x, s, 1.3), s, ctx));
    if (move < fixed_gate) {
      estimate.contains_fixed_point = true;
      break;
    }
  }

  // candidate closed orbit from the spectral verdict
  double window = 0.0;
  if (spectral.verdict.kind == VerdictKind::periodic)
    window = spectral.verdict.period;
  else if (!spectral.verdict.distinct_alphas.empty())
    window = 2.0 * std::numbers::pi / spectral.verdict.distinct_alphas.back();

  if (window <= 0.0) {
    for (const GroupElement& s : estimate.samples)
      estimate.hausdorff_gap = std::max(estimate.hausdorff_gap, riemannian_distance(s, g, ctx));
  } else {
    constexpr std::size_t kOrbit = 2048;
    std::vector<GroupElement> orbit(kOrbit);
    parallel_for(kOrbit, exec, [&](std::size_t j) {
      orbit[j] = linear_flow(x, g, window * static_cast<double>(j) / kOrbit);
    });
    std::vector<double> gaps(n, 0.0);
    parallel_for(n, exec, [&](std::size_t i) {
      std::size_t best = 0;
      double best_dist = 1e30;
      for (std::size_t j = 0; j < kOrbit; ++j) {
        const double dist = riemannian_distance(estimate.samples[i], orbit[j], ctx);
        if (dist < best_dist) {
          best_dist = dist;
          best = j;
        }
      }
      const double u = window * static_cast<double>(best) / kOrbit;
      const double span = window / kOrbit;
      const auto [t_star, f_star] = golden_min(
          [&](double t) { return riemannian_distance(estimate.samples[i], linear_flow(x, g, t), ctx); },
          u - span, u + span);
      (void)t_star;
      gaps[i] = f_star;
    });
    for (double gap : gaps) estimate.hausdorff_gap = std::max(estimate.hausdorff_gap, gap);
  }

  estimate.is_periodic_orbit = spectral.verdict.kind == VerdictKind::periodic &&
                               !estimate.contains_fixed_point && estimate.hausdorff_gap < 1e-6;
  return estimate;
}

bool verify_orbit_tube(const AlgebraElement& x, const GroupElement& g, const GroupElement& h,
                       double r, Exec exec) {
  if (!(r > 0.0)) fail(ErrorKind::InvalidArgument, "tube radius must be positive");
  const MetricContext ctx = make_metric(x.algebra);
  const SpectralReport spectral = analyze_derivation(x);
  const double window = spectral.verdict.kind == VerdictKind::periodic
                            ? spectral.verdict.period
                            : 20.0;

  constexpr std::size_t kOrbitGrid = 1500;
  const auto orbit_min_distance = [&](const GroupElement& p) {
    std::size_t best = 0;
    double best_dist = 1e30;
    std::vector<double> dist(kOrbitGrid, 0.0);
    parallel_for(kOrbitGrid, exec, [&](std::size_t j) {
      dist[j] = riemannian_distance(p, linear_flow(x, g, window * static_cast<double>(j) / kOrbitGrid), ctx);
    });
    for (std::size_t j = 0; j < kOrbitGrid; ++j) {
      if (dist[j] < best_dist) {
        best_dist = dist[j];
        best = j;
      }
    }
    const double u = window * static_cast<double>(best) / kOrbitGrid;
    const double span = window / kOrbitGrid;
    const auto [t_star, f_star] = golden_min(
        [&](double t) { return riemannian_distance(p, linear_flow(x, g, t), ctx); }, u - span,
        u + span);
    (void)t_star;
    return f_star;
  };

  if (orbit_min_distance(h) > r)
    fail(ErrorKind::HNotInTube, "h does not start within distance r of the orbit of g");

  constexpr std::size_t kTimeSamples = 80;
  for (std::size_t k = 0; k < kTimeSamples; ++k) {
    const double s = 20.0 * static_cast<double>(k + 1) / kTimeSamples;
    if (orbit_min_distance(linear_flow(x, h, s)) > r + 1e-8) return false;
  }
  return true;
}

std::string verification_report_to_json(const VerificationReport& report, bool include_runtime) {
  std::ostringstream out;
  out << "{\"claim\": \"" << report.claim << "\", \"group\": \"" << report.group
      << "\", \"coefficients\": [";
  for (std::size_t i = 0; i < report.coefficients.size(); ++i)
    out << (i ? ", " : "") << fmt17(report.coefficients[i]);
  out << "], \"trials\": " << report.trials << ", \"max_deviation\": "
      << fmt17(report.max_deviation) << ", \"pass\": " << (report.pass ? "true" : "false")
      << ", \"seed\": " << report.seed;
  if (include_runtime) out << ", \"runtime_ms\": " << fmt17(report.runtime_ms);
  out << "}";
  return out.str();
}

}  // namespace lieflow
