#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "lieflow/error.hpp"

namespace lieflow {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Real matrices are the imaginary-part-zero
/// subcase; everything in this project is at most ~30x30, so all algorithms
/// are straightforward cubic ones.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Row-major list of real entries.
  static Matrix from_real(std::size_t rows, std::size_t cols, std::initializer_list<double> entries);
  static Matrix from_complex(std::size_t rows, std::size_t cols, std::initializer_list<cplx> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(cplx scalar);
  Matrix& operator*=(double scalar);

  Matrix transpose() const;
  Matrix conj_transpose() const;
  cplx trace() const;

  double norm_fro() const;   ///< sqrt of sum of squared magnitudes
  double norm_one() const;   ///< max absolute column sum
  double norm_inf() const;   ///< max absolute row sum
  double norm_max() const;   ///< max entry magnitude

  /// True when every imaginary part is exactly zero.
  bool is_real() const;
  double max_imag() const;
  Matrix real_part() const;

  const std::vector<cplx>& data() const { return data_; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator-(const Matrix& m);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Matrix operator*(cplx scalar, Matrix m);
Matrix operator*(double scalar, Matrix m);

/// max |a_ij - b_ij|
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Commutator ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

/// LU factorization with partial pivoting.
struct LuFactors {
  Matrix lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  bool singular = false;
};

LuFactors lu_factor(Matrix a);
Matrix lu_solve(const LuFactors& f, Matrix rhs);
/// Solves a x = rhs; throws on singular a.
Matrix solve(const Matrix& a, const Matrix& rhs);
Matrix inverse(const Matrix& a);
cplx determinant(const Matrix& a);

}  // namespace lieflow
