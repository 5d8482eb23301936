#include "lieflow/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace lieflow {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::EigenvalueAtMinusOne: return "EigenvalueAtMinusOne";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::MixedAlgebras: return "MixedAlgebras";
    case ErrorKind::MixedGroups: return "MixedGroups";
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::NotInAlgebra: return "NotInAlgebra";
    case ErrorKind::WrongAlgebra: return "WrongAlgebra";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::InvalidTolerance: return "InvalidTolerance";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::HNotInTube: return "HNotInTube";
    case ErrorKind::UnknownGroup: return "UnknownGroup";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Error";
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_real(std::size_t rows, std::size_t cols, std::initializer_list<double> entries) {
  if (entries.size() != rows * cols) fail(ErrorKind::InvalidArgument, "entry count mismatch");
  Matrix m(rows, cols);
  std::size_t k = 0;
  for (double v : entries) m.data_[k++] = v;
  return m;
}

Matrix Matrix::from_complex(std::size_t rows, std::size_t cols, std::initializer_list<cplx> entries) {
  if (entries.size() != rows * cols) fail(ErrorKind::InvalidArgument, "entry count mismatch");
  Matrix m(rows, cols);
  std::size_t k = 0;
  for (cplx v : entries) m.data_[k++] = v;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(cplx scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

Matrix& Matrix::operator*=(double scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Matrix Matrix::conj_transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

cplx Matrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double Matrix::norm_fro() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double Matrix::norm_one() const {
  double best = 0.0;
  for (std::size_t j = 0; j < cols_; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

double Matrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
    best = std::max(best, s);
  }
  return best;
}

double Matrix::norm_max() const {
  double best = 0.0;
  for (const auto& v : data_) best = std::max(best, std::abs(v));
  return best;
}

bool Matrix::is_real() const {
  for (const auto& v : data_)
    if (v.imag() != 0.0) return false;
  return true;
}

double Matrix::max_imag() const {
  double best = 0.0;
  for (const auto& v : data_) best = std::max(best, std::abs(v.imag()));
  return best;
}

Matrix Matrix::real_part() const {
  Matrix m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].real();
  return m;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }

Matrix operator-(const Matrix& m) {
  Matrix r = m;
  r *= -1.0;
  return r;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols() != rhs.rows()) fail(ErrorKind::InvalidArgument, "matrix product shape mismatch");
  Matrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const cplx a = lhs(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

Matrix operator*(cplx scalar, Matrix m) { return m *= scalar; }
Matrix operator*(double scalar, Matrix m) { return m *= scalar; }

double max_abs_diff(const Matrix& a, const Matrix& b) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) best = std::max(best, std::abs(a(i, j) - b(i, j)));
  return best;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

LuFactors lu_factor(Matrix a) {
  if (!a.is_square()) fail(ErrorKind::NonSquare, "lu_factor needs a square matrix");
  const std::size_t n = a.rows();
  LuFactors f;
  f.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        piv = i;
      }
    }
    if (best == 0.0) {
      f.singular = true;
      continue;
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
      f.sign = -f.sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      a(i, k) /= a(k, k);
      const cplx m = a(i, k);
      if (m == 0.0) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
    }
  }
  f.lu = std::move(a);
  return f;
}

Matrix lu_solve(const LuFactors& f, Matrix rhs) {
  const std::size_t n = f.lu.rows();
  if (rhs.rows() != n) fail(ErrorKind::InvalidArgument, "lu_solve shape mismatch");
  if (f.singular) fail(ErrorKind::NoConvergence, "singular matrix in lu_solve");
  Matrix x(n, rhs.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < rhs.cols(); ++j) x(i, j) = rhs(f.perm[i], j);
  // forward substitution (unit lower)
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t k = 0; k < i; ++k) {
      const cplx m = f.lu(i, k);
      if (m == 0.0) continue;
      for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) -= m * x(k, j);
    }
  // back substitution
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t k = ii + 1; k < n; ++k) {
      const cplx m = f.lu(ii, k);
      if (m == 0.0) continue;
      for (std::size_t j = 0; j < x.cols(); ++j) x(ii, j) -= m * x(k, j);
    }
    for (std::size_t j = 0; j < x.cols(); ++j) x(ii, j) /= f.lu(ii, ii);
  }
  return x;
}

Matrix solve(const Matrix& a, const Matrix& rhs) { return lu_solve(lu_factor(a), rhs); }

Matrix inverse(const Matrix& a) { return solve(a, Matrix::identity(a.rows())); }

cplx determinant(const Matrix& a) {
  LuFactors f = lu_factor(a);
  if (f.singular) return 0.0;
  cplx det = static_cast<double>(f.sign);
  for (std::size_t i = 0; i < a.rows(); ++i) det *= f.lu(i, i);
  return det;
}

}  // namespace lieflow
