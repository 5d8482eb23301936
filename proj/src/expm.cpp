#include "lieflow/expm.hpp"

#include <cmath>

#include "lieflow/eigen.hpp"

namespace lieflow {
namespace {

constexpr double kSquaringThreshold = 5.4;

// Degree-13 Pade coefficients for exp.
constexpr double kPade13[14] = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
    129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
    1323241920.0,        40840800.0,          960960.0,           16380.0,
    182.0,               1.0};

// Denman-Beavers iteration for the principal square root.
Matrix sqrtm_db(const Matrix& a) {
  Matrix y = a;
  Matrix z = Matrix::identity(a.rows());
  for (int iter = 0; iter < 60; ++iter) {
    Matrix y_next = 0.5 * (y + inverse(z));
    Matrix z_next = 0.5 * (z + inverse(y));
    const double delta = max_abs_diff(y_next, y);
    y = std::move(y_next);
    z = std::move(z_next);
    if (delta <= 1e-15 * std::max(1.0, y.norm_one())) break;
  }
  return y;
}

// log(I + e) by the Mercator series, valid for ||e|| < 1; callers scale to
// ||e|| <= 0.25 first.
Matrix log_series(const Matrix& g) {
  const std::size_t n = g.rows();
  Matrix e = g - Matrix::identity(n);
  Matrix term = e;
  Matrix acc = e;
  for (int k = 2; k <= 60; ++k) {
    term = term * e;
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;
    Matrix contrib = (sign / static_cast<double>(k)) * term;
    acc += contrib;
    if (contrib.norm_max() < 1e-18) break;
  }
  return acc;
}

}  // namespace

Matrix mat_exp(const Matrix& a) {
  if (!a.is_square()) fail(ErrorKind::NonSquare, "mat_exp needs a square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return a;

  const double norm = a.norm_one();
  int squarings = 0;
  Matrix scaled = a;
  if (norm > kSquaringThreshold) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kSquaringThreshold)));
    scaled *= std::ldexp(1.0, -squarings);
  }

  const Matrix ident = Matrix::identity(n);
  const Matrix a2 = scaled * scaled;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a2 * a4;

  Matrix u_inner = kPade13[13] * a6 + kPade13[11] * a4 + kPade13[9] * a2;
  Matrix u = scaled * (a6 * u_inner + kPade13[7] * a6 + kPade13[5] * a4 + kPade13[3] * a2 +
                       kPade13[1] * ident);
  Matrix v_inner = kPade13[12] * a6 + kPade13[10] * a4 + kPade13[8] * a2;
  Matrix v = a6 * v_inner + kPade13[6] * a6 + kPade13[4] * a4 + kPade13[2] * a2 + kPade13[0] * ident;

  Matrix result = solve(v - u, v + u);
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

Matrix mat_log_principal(const Matrix& g) { return mat_log_principal(g, eigenvalues(g)); }

Matrix mat_log_principal(const Matrix& g, const std::vector<cplx>& eigs) {
  if (!g.is_square()) fail(ErrorKind::NonSquare, "mat_log_principal needs a square matrix");
  const double scale = std::max(1.0, g.norm_inf());
  for (const cplx& lambda : eigs) {
    if (lambda.real() <= 0.0 && std::abs(lambda.imag()) < 1e-8 * scale)
      fail(ErrorKind::EigenvalueAtMinusOne,
           "eigenvalue on the closed negative real axis; principal log undefined");
  }

  Matrix current = g;
  int halvings = 0;
  const std::size_t n = g.rows();
  while ((current - Matrix::identity(n)).norm_one() > 0.25 && halvings < 40) {
    current = sqrtm_db(current);
    ++halvings;
  }
  Matrix log = log_series(current);
  log *= std::ldexp(1.0, halvings);
  return log;
}

Matrix polar_orthonormalize(const Matrix& g) {
  Matrix x = g;
  for (int iter = 0; iter < 40; ++iter) {
    Matrix next = 0.5 * (x + inverse(x.conj_transpose()));
    const double delta = max_abs_diff(next, x);
    x = std::move(next);
    if (delta <= 1e-15 * std::max(1.0, x.norm_one())) break;
  }
  return x;
}

}  // namespace lieflow
