#pragma once

#include "lieflow/algebra.hpp"

namespace lieflow {

/// A matrix certified to lie in the group of its algebra: SO(n) for the real
/// algebras (orthogonal, det 1, real entries), SU(2) for su2 (unitary, det 1).
struct GroupElement {
  AlgebraPtr algebra;
  Matrix matrix;
  double membership_residual = 0.0;
};

/// max(||g g^H - I||_F, |det g - 1|), plus the largest imaginary entry for
/// real groups.
double group_membership_residual(const LieAlgebra& alg, const Matrix& m);

/// Throws NotInGroup when the residual exceeds tol.
GroupElement make_group_element(AlgebraPtr algebra, Matrix m, double tol = 1e-9);

GroupElement group_identity(AlgebraPtr algebra);
GroupElement group_mul(const GroupElement& a, const GroupElement& b);
/// Inverse by conjugate transpose (exact on the group).
GroupElement group_inverse(const GroupElement& g);

bool same_group(const GroupElement& a, const GroupElement& b);

/// The d x d matrix of Y -> g Y g^-1 in the basis of alg.
/// Throws NotInGroup when g fails the membership predicate.
Matrix adjoint_rep(const GroupElement& g, const LieAlgebra& alg);

/// exp of a random algebra element with coordinates uniform in [lo, hi].
GroupElement random_group_element(const AlgebraPtr& algebra, XorShift64Star& rng, double lo = -1.5,
                                  double hi = 1.5);

}  // namespace lieflow
