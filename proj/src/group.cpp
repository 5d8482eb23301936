#include "lieflow/group.hpp"

#include <algorithm>
#include <cmath>

#include "lieflow/expm.hpp"

namespace lieflow {

double group_membership_residual(const LieAlgebra& alg, const Matrix& m) {
  if (!m.is_square() || m.rows() != alg.matrix_dim()) return 1e30;
  const Matrix gram = m * m.conj_transpose() - Matrix::identity(m.rows());
  double residual = gram.norm_fro();
  residual = std::max(residual, std::abs(determinant(m) - cplx(1.0)));
  if (!alg.complex_field()) residual = std::max(residual, m.max_imag());
  return residual;
}

GroupElement make_group_element(AlgebraPtr algebra, Matrix m, double tol) {
  GroupElement g;
  g.membership_residual = group_membership_residual(*algebra, m);
  if (g.membership_residual > tol)
    fail(ErrorKind::NotInGroup, "matrix fails the " + algebra->group_name() +
                                    " membership predicate (residual " +
                                    std::to_string(g.membership_residual) + ")");
  g.algebra = std::move(algebra);
  g.matrix = std::move(m);
  return g;
}

GroupElement group_identity(AlgebraPtr algebra) {
  const std::size_t n = algebra->matrix_dim();
  return make_group_element(std::move(algebra), Matrix::identity(n));
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
  if (!same_group(a, b)) fail(ErrorKind::MixedGroups, "elements live in different groups");
  GroupElement g;
  g.algebra = a.algebra;
  g.matrix = a.matrix * b.matrix;
  g.membership_residual = group_membership_residual(*g.algebra, g.matrix);
  return g;
}

GroupElement group_inverse(const GroupElement& g) {
  GroupElement inv;
  inv.algebra = g.algebra;
  inv.matrix = g.matrix.conj_transpose();
  inv.membership_residual = group_membership_residual(*inv.algebra, inv.matrix);
  return inv;
}

bool same_group(const GroupElement& a, const GroupElement& b) {
  return a.algebra == b.algebra ||
         (a.algebra && b.algebra && a.algebra->name() == b.algebra->name());
}

Matrix adjoint_rep(const GroupElement& g, const LieAlgebra& alg) {
  const double residual = group_membership_residual(alg, g.matrix);
  if (residual > 1e-9)
    fail(ErrorKind::NotInGroup, "adjoint_rep: matrix is not in " + alg.group_name());
  const std::size_t d = alg.dim();
  const Matrix ginv = g.matrix.conj_transpose();
  Matrix ad(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const Matrix conj = g.matrix * alg.basis()[j] * ginv;
    double expand_residual = 0.0;
    const std::vector<double> coords = alg.expand(conj, &expand_residual);
    if (expand_residual > 1e-8)
      fail(ErrorKind::NotInAlgebra, "adjoint image left the algebra span");
    for (std::size_t k = 0; k < d; ++k) ad(k, j) = coords[k];
  }
  return ad;
}

GroupElement random_group_element(const AlgebraPtr& algebra, XorShift64Star& rng, double lo,
                                  double hi) {
  const AlgebraElement x = random_algebra_element(algebra, rng, lo, hi);
  return make_group_element(algebra, mat_exp(x.matrix));
}

}  // namespace lieflow
