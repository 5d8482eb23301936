#include "lieflow/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lieflow/expm.hpp"
#include "lieflow/format.hpp"

namespace lieflow {
namespace {

// Two rates count as the same alpha when |a1 - a2| <= 1e-8 * max(a1, a2, 1).
std::vector<double> merge_rates(std::vector<double> rates) {
  std::sort(rates.begin(), rates.end());
  std::vector<double> merged;
  for (double r : rates) {
    if (!merged.empty() && std::abs(r - merged.back()) <= 1e-8 * std::max({r, merged.back(), 1.0}))
      continue;
    merged.push_back(r);
  }
  return merged;
}

}  // namespace

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::all_fixed: return "all-fixed";
    case VerdictKind::periodic: return "periodic";
    case VerdictKind::non_periodic: return "non-periodic";
  }
  return "?";
}

SpectralReport analyze_derivation(const AlgebraElement& x) {
  SpectralReport report;
  report.algebra_name = x.algebra->name();
  report.coefficients = x.coords;
  report.derivation = ad_matrix(x);
  report.spectrum = eigen_decompose(report.derivation);

  const double scale = std::max(1.0, report.derivation.norm_inf());
  const double zero_tol = 1e-9 * scale;

  // real-part decomposition: cluster distinct real parts, carrying the
  // algebraic multiplicities as generalized-eigenspace dimensions
  std::vector<std::pair<double, std::size_t>> parts;
  for (const EigenValue& ev : report.spectrum.eigenvalues) {
    const double re = (std::abs(ev.value.real()) <= zero_tol) ? 0.0 : ev.value.real();
    bool merged = false;
    for (auto& [part, dim] : parts) {
      if (std::abs(part - re) <= 1e-8 * scale) {
        dim += ev.algebraic;
        merged = true;
        break;
      }
    }
    if (!merged) parts.emplace_back(re, ev.algebraic);
  }
  std::sort(parts.begin(), parts.end());
  report.realpart_decomposition = std::move(parts);

  report.all_semisimple = report.spectrum.diagonalizable;
  report.is_hyperbolic = true;
  for (const EigenValue& ev : report.spectrum.eigenvalues)
    if (std::abs(ev.value.real()) <= zero_tol) report.is_hyperbolic = false;

  // verdict
  double coord_scale = 0.0;
  for (double c : x.coords) coord_scale = std::max(coord_scale, std::abs(c));
  if (report.derivation.norm_max() <= 1e-12 * std::max(1.0, coord_scale)) {
    report.verdict.kind = VerdictKind::all_fixed;
    return report;
  }

  bool purely_imaginary = true;
  std::vector<double> rates;
  for (const EigenValue& ev : report.spectrum.eigenvalues) {
    if (std::abs(ev.value) <= zero_tol) continue;  // the zero eigenvalue
    if (std::abs(ev.value.real()) > zero_tol) purely_imaginary = false;
    const double rate = std::abs(ev.value.imag());
    if (rate > zero_tol) rates.push_back(rate);
  }
  report.verdict.distinct_alphas = merge_rates(std::move(rates));

  if (purely_imaginary && report.verdict.distinct_alphas.size() == 1) {
    report.verdict.kind = VerdictKind::periodic;
    report.verdict.alpha = report.verdict.distinct_alphas.front();
    report.verdict.period = 2.0 * std::numbers::pi / report.verdict.alpha;
  } else {
    report.verdict.kind = VerdictKind::non_periodic;
  }
  return report;
}

bool check_hyperbolic(const AlgebraElement& x) {
  return spectrum_is_hyperbolic(ad_matrix(x), 1e-9);
}

bool check_semisimple_eigenvalues(const Matrix& a) { return eigen_decompose(a).diagonalizable; }

double lyapunov_exponent(const AlgebraElement& x, const AlgebraElement& v, double t_final) {
  if (x.algebra->name() != v.algebra->name())
    fail(ErrorKind::MixedAlgebras, "lyapunov_exponent needs matching algebras");
  if (v.is_zero()) fail(ErrorKind::ZeroVector, "lyapunov_exponent needs v != 0");
  if (!(t_final > 0.0)) fail(ErrorKind::InvalidArgument, "t_final must be positive");

  const Matrix flow = mat_exp(t_final * ad_matrix(x));
  const std::size_t d = v.coords.size();
  std::vector<double> image(d, 0.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) image[i] += flow(i, j).real() * v.coords[j];

  const Matrix& gram = x.algebra->killing_gram();
  auto knorm = [&](const std::vector<double>& c) {
    double q = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) q -= c[i] * gram(i, j).real() * c[j];
    return std::sqrt(std::max(q, 0.0));
  };
  return std::log(knorm(image) / knorm(v.coords)) / t_final;
}

So4Criterion so4_periodicity_criterion(double a, double b, double c, double d, double e,
                                       double f) {
  double scale = 0.0;
  for (double v : {a, b, c, d, e, f}) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) fail(ErrorKind::AllZero, "all six coefficients are zero");

  const double gate = 1e-9 * std::max(1.0, scale * scale);
  So4Criterion result;
  result.bc_minus_ed = b * c - e * d;
  result.periodic = std::abs(result.bc_minus_ed) <= gate;
  if (!result.periodic) return result;

  const double primary = (a + f) * (a + f) + (b + e) * (b + e) + (c - d) * (c - d);
  const double fallback = (a + f) * (a + f) + (b - e) * (b - e) + (c + d) * (c + d);
  if (primary > gate)
    result.period = 2.0 * std::numbers::pi / std::sqrt(primary);
  else if (fallback > gate)
    result.period = 2.0 * std::numbers::pi / std::sqrt(fallback);
  return result;
}

std::array<double, 2> so4_rotation_rates(double a, double b, double c, double d, double e,
                                         double f) {
  const double plus = (a + f) * (a + f) + (b - e) * (b - e) + (c + d) * (c + d);
  const double minus = (a - f) * (a - f) + (b + e) * (b + e) + (c - d) * (c - d);
  return {std::sqrt(plus), std::sqrt(minus)};
}

std::string spectral_report_to_json(const SpectralReport& report) {
  std::ostringstream out;
  out << "{\n  \"algebra\": \"" << report.algebra_name << "\",\n  \"coefficients\": [";
  for (std::size_t i = 0; i < report.coefficients.size(); ++i)
    out << (i ? ", " : "") << fmt17(report.coefficients[i]);
  out << "],\n  \"eigenvalues\": [";

  std::vector<EigenValue> sorted = report.spectrum.eigenvalues;
  std::sort(sorted.begin(), sorted.end(), [](const EigenValue& l, const EigenValue& r) {
    if (l.value.real() != r.value.real()) return l.value.real() < r.value.real();
    return l.value.imag() < r.value.imag();
  });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    out << (i ? ", " : "") << "{\"re\": " << fmt17(sorted[i].value.real())
        << ", \"im\": " << fmt17(sorted[i].value.imag()) << ", \"alg_mult\": " << sorted[i].algebraic
        << ", \"geo_mult\": " << sorted[i].geometric << "}";
  }
  out << "],\n  \"verdict\": {\"kind\": \"" << to_string(report.verdict.kind) << "\"";
  if (report.verdict.kind == VerdictKind::periodic) {
    out << ", \"period\": " << fmt17(report.verdict.period)
        << ", \"alpha\": " << fmt17(report.verdict.alpha);
  } else if (report.verdict.kind == VerdictKind::non_periodic) {
    out << ", \"alphas\": [";
    for (std::size_t i = 0; i < report.verdict.distinct_alphas.size(); ++i)
      out << (i ? ", " : "") << fmt17(report.verdict.distinct_alphas[i]);
    out << "]";
  }
  out << "},\n  \"flags\": {\"hyperbolic\": " << (report.is_hyperbolic ? "true" : "false")
      << ", \"all_semisimple\": " << (report.all_semisimple ? "true" : "false") << "},\n";
  out << "  \"realpart_decomposition\": [";
  for (std::size_t i = 0; i < report.realpart_decomposition.size(); ++i) {
    out << (i ? ", " : "") << "{\"real_part\": " << fmt17(report.realpart_decomposition[i].first)
        << ", \"dimension\": " << report.realpart_decomposition[i].second << "}";
  }
  out << "]\n}\n";
  return out.str();
}

}  // namespace lieflow
