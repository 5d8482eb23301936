#pragma once

#include <array>
#include <optional>

#include "lieflow/algebra.hpp"

namespace lieflow {

enum class VerdictKind { all_fixed, periodic, non_periodic };

const char* to_string(VerdictKind k);

struct SpectralVerdict {
  VerdictKind kind = VerdictKind::non_periodic;
  double period = 0.0;                 // set when periodic
  double alpha = 0.0;                  // the unique rotation rate when periodic
  std::vector<double> distinct_alphas; // nonzero rates, merged at tolerance
};

/// Classification of the derivation D = ad(X).
struct SpectralReport {
  std::string algebra_name;
  std::vector<double> coefficients;
  Matrix derivation;
  Spectrum spectrum;
  /// distinct eigenvalue real parts -> total generalized-eigenspace dimension
  std::vector<std::pair<double, std::size_t>> realpart_decomposition;
  bool is_hyperbolic = false;
  bool all_semisimple = false;
  SpectralVerdict verdict;
};

/// Full spectral classification: eigenvalues of ad(X) with multiplicities,
/// real-part decomposition, hyperbolicity and semisimplicity flags, and the
/// periodicity verdict (Periodic iff nonzero eigenvalues exist, all are purely
/// imaginary at tolerance, and share a single rate alpha; then T = 2*pi/alpha).
SpectralReport analyze_derivation(const AlgebraElement& x);

/// True iff every eigenvalue of ad(X) has |Re| above tolerance. Identically
/// false on the compact algebras registered here.
bool check_hyperbolic(const AlgebraElement& x);

/// True iff geometric equals algebraic multiplicity for every eigenvalue.
bool check_semisimple_eigenvalues(const Matrix& a);

/// (1/t_final) * log(||e^{t_final ad X} v||_K / ||v||_K) with the norm from
/// the negative Killing form. Throws ZeroVector for v = 0.
double lyapunov_exponent(const AlgebraElement& x, const AlgebraElement& v, double t_final);

/// The bc = ed shortcut for X = a e12 + b e13 + c e14 + d e23 + e e24 + f e34
/// on so(4): periodic iff |bc - ed| <= 1e-9 * max(1, scale^2); the period is
/// 2*pi/sqrt((a+f)^2+(b+e)^2+(c-d)^2), falling back to the other coefficient
/// pair when that radicand vanishes. Throws AllZero when all six coefficients
/// are zero.
///
/// The shortcut disagrees with the honest spectral classifier on a degenerate
/// locus (for instance b = c = 1, d = e = 0, where ad(X) has the doubled pair
/// +-i*sqrt(2) and the orbit is periodic while bc - ed = 1); analyze_derivation
/// is authoritative, and so4_rotation_rates gives the closed form that always
/// matches it.
struct So4Criterion {
  bool periodic = false;
  std::optional<double> period;
  double bc_minus_ed = 0.0;
};

So4Criterion so4_periodicity_criterion(double a, double b, double c, double d, double e, double f);

/// Rotation rates of ad(X) on so(4) from the self-dual/anti-self-dual
/// splitting: {sqrt((a+f)^2+(b-e)^2+(c+d)^2), sqrt((a-f)^2+(b+e)^2+(c-d)^2)}.
/// The ad spectrum is exactly {0, 0, +-i r0, +-i r1}.
std::array<double, 2> so4_rotation_rates(double a, double b, double c, double d, double e,
                                         double f);

/// JSON with keys coefficients, eigenvalues (re, im, alg_mult, geo_mult),
/// verdict (kind, period/alpha or alphas), flags, realpart_decomposition.
std::string spectral_report_to_json(const SpectralReport& report);

}  // namespace lieflow
