#pragma once

#include <vector>

#include "lieflow/matrix.hpp"

namespace lieflow {

struct EigenValue {
  cplx value;
  std::size_t algebraic = 0;
  std::size_t geometric = 0;
};

/// Distinct eigenvalues with multiplicities.
struct Spectrum {
  std::vector<EigenValue> eigenvalues;
  std::size_t dimension = 0;
  bool diagonalizable = false;

  std::size_t total_algebraic() const;
};

/// All n eigenvalues (with repetition), unordered except that for real input
/// they come in exact conjugate pairs (bitwise) after symmetrization.
/// Hessenberg reduction followed by shifted QR on the complexification;
/// iteration budget 100*n^2, NoConvergence past that.
std::vector<cplx> eigenvalues(const Matrix& a);

/// Clustered spectrum; geometric multiplicity is the dimension of the
/// numerical kernel of (a - lambda I) at rank tolerance
/// 1e-8 * max absolute row sum.
Spectrum eigen_decompose(const Matrix& a);

/// Rank by Gaussian elimination with full pivoting; pivots below tol count as zero.
std::size_t numerical_rank(Matrix a, double tol);

/// True iff every eigenvalue satisfies |Re| > tol (no eigenvalue with zero
/// real part at tolerance).
bool spectrum_is_hyperbolic(const Matrix& a, double tol = 1e-9);

}  // namespace lieflow
