#pragma once

#include "lieflow/flow.hpp"
#include "lieflow/spectral.hpp"

namespace lieflow {

/// Bi-invariant metric from the negative Cartan-Killing form.
struct MetricContext {
  AlgebraPtr algebra;
  Matrix gram;         ///< -killing_gram, positive definite
  double trace_scale;  ///< kappa with B(X,Y) = kappa tr(X Y); d^2 = kappa * sum of squared eigenangles
};

/// Throws InvalidArgument when -killing_gram is not positive definite (the
/// algebra is not of compact type).
MetricContext make_metric(AlgebraPtr algebra);

/// sqrt(c^T (-K) c) for a coordinate vector c.
double killing_vector_norm(const MetricContext& ctx, const std::vector<double>& coords);

/// Geodesic distance ||log(g^-1 h)|| in the Killing norm. Away from the cut
/// locus this goes through the principal logarithm re-expressed in the basis;
/// near an eigenvalue -1 of g^-1 h it switches to the eigenangle form
/// d^2 = kappa * sum(theta_k^2) over all eigenphases. Throws MixedGroups.
double riemannian_distance(const GroupElement& g, const GroupElement& h, const MetricContext& ctx);

struct VerificationReport {
  std::string claim;
  std::string group;
  std::vector<double> coefficients;
  std::size_t trials = 0;
  double max_deviation = 0.0;
  bool pass = false;
  double runtime_ms = 0.0;
  std::uint64_t seed = 0;
};

/// max |d(phi_t g, phi_t h) - d(g, h)| over `trials` random pairs and times
/// t in [-10, 10]; passes below 1e-8.
VerificationReport verify_isometry(const AlgebraElement& x, std::size_t trials, std::uint64_t seed,
                                   Exec exec = Exec::parallel);

/// max |d(phi_t g, e) - d(g, e)| over n samples of [0, t_max]; passes below 1e-8.
VerificationReport verify_sphere_invariance(const AlgebraElement& x, const GroupElement& g,
                                            double t_max, std::size_t n,
                                            Exec exec = Exec::parallel);

enum class ReturnKind { fixed, periodic, no_return };

const char* to_string(ReturnKind k);

struct PeriodEstimate {
  ReturnKind kind = ReturnKind::no_return;
  double period = 0.0;     ///< smallest refined return time when periodic
  double scan_min = 0.0;   ///< smallest positive-time distance seen on the scan
  double orbit_diameter = 0.0;
};

/// Scans d(flow_t(g), g) on a 10^4-point grid over [0, t_horizon], brackets
/// local minima below tol and refines each by golden-section search to 1e-10
/// in t. `fixed` when the orbit never leaves a tol-ball, `no-return` when no
/// minimum dips below tol within the horizon (a horizon-bounded statement,
/// not a proof). Throws InvalidTolerance for tol <= 0.
PeriodEstimate detect_period(const AlgebraElement& x, FlowKind kind, const GroupElement& g,
                             double t_horizon, double tol, Exec exec = Exec::parallel);

/// 1e-6 times the orbit diameter measured on a coarse scan (with a 1e-9
/// floor), the default return tolerance.
double default_return_tolerance(const AlgebraElement& x, FlowKind kind, const GroupElement& g,
                                double t_horizon);

struct OmegaLimitEstimate {
  GroupElement seed;
  std::vector<GroupElement> samples;
  bool contains_fixed_point = false;
  bool is_periodic_orbit = false;
  double hausdorff_gap = 0.0;     ///< sup over tail samples of distance to the candidate closed orbit
  double sphere_deviation = 0.0;  ///< max | d(sample, e) - d(g, e) |
};

/// Samples the linear-flow orbit tail on [t_tail_start, t_tail_end] and tests
/// sphere confinement plus clustering onto the closed orbit {phi_t(g) : t in
/// [0, T)} predicted by the spectral verdict.
OmegaLimitEstimate estimate_omega_limit(const AlgebraElement& x, const GroupElement& g,
                                        double t_tail_start, double t_tail_end, std::size_t n,
                                        Exec exec = Exec::parallel);

/// True iff phi_s(h) stays within r + 1e-8 of the orbit of g for sampled
/// s in [0, 20]. Throws HNotInTube when h starts farther than r from the orbit.
bool verify_orbit_tube(const AlgebraElement& x, const GroupElement& g, const GroupElement& h,
                       double r, Exec exec = Exec::parallel);

/// JSON with keys claim, group, coefficients, trials, max_deviation, pass,
/// seed and (optionally) runtime_ms; the latter is off by default so reports
/// are byte-reproducible.
std::string verification_report_to_json(const VerificationReport& report,
                                        bool include_runtime = false);

}  // namespace lieflow
