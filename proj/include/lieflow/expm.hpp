#pragma once

#include "lieflow/matrix.hpp"

namespace lieflow {

/// Matrix exponential by scaling-and-squaring with the degree-13 Pade
/// approximant; the matrix is scaled until its 1-norm is at most 5.4.
Matrix mat_exp(const Matrix& a);

/// Principal matrix logarithm by inverse scaling-and-squaring (Denman-Beavers
/// square roots, then the log(I+E) series). The result has eigenvalue
/// imaginary parts in (-pi, pi]. Throws EigenvalueAtMinusOne when the input
/// has an eigenvalue on the closed negative real axis (cut locus for the
/// groups handled here: a rotation by pi).
Matrix mat_log_principal(const Matrix& g);

/// Same, reusing precomputed eigenvalues of g for the cut-locus gate.
Matrix mat_log_principal(const Matrix& g, const std::vector<cplx>& eigs);

/// Nearest unitary (orthogonal) factor of an invertible matrix via the
/// Newton iteration X <- (X + X^-H)/2.
Matrix polar_orthonormalize(const Matrix& g);

}  // namespace lieflow
