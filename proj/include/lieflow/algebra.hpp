#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lieflow/eigen.hpp"
#include "lieflow/matrix.hpp"
#include "lieflow/rng.hpp"

namespace lieflow {

/// A matrix Lie algebra given by an ordered basis. Immutable after
/// construction; instances are shared across threads freely.
///
/// Registered algebras and their frozen basis orders:
///   so3 : (L_x, L_y, L_z), the 3x3 matrices with X = [[0,-z,y],[z,0,-x],[-y,x,0]]
///   su2 : the traceless skew-Hermitian 2x2 basis with the same structure
///         constants as so3 ([E1,E2]=E3 cyclic)
///   so4..so8 : e_ij for i<j in lexicographic order, realized with +1 in the
///         (j,i) entry and -1 in the (i,j) entry so that [e12,e13] = e23 etc.
class LieAlgebra {
public:
  static std::shared_ptr<const LieAlgebra> create(std::string name, std::string group_name,
                                                  std::vector<Matrix> basis,
                                                  bool round_integer_constants = true);

  const std::string& name() const { return name_; }
  const std::string& group_name() const { return group_name_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t matrix_dim() const { return basis_.empty() ? 0 : basis_[0].rows(); }
  bool complex_field() const { return complex_field_; }
  const std::vector<Matrix>& basis() const { return basis_; }

  /// c^k_{ij} with [B_i, B_j] = sum_k c^k_{ij} B_k.
  double structure_constant(std::size_t k, std::size_t i, std::size_t j) const {
    return structure_[(i * dim() + j) * dim() + k];
  }

  /// K_ij = tr(ad B_i . ad B_j); d x d real symmetric.
  const Matrix& killing_gram() const { return killing_gram_; }

  /// kappa with B(X, Y) = kappa * tr(X_mat Y_mat); holds for every registered
  /// algebra (so(n): n-2, su(2): 4).
  double trace_scale() const { return trace_scale_; }
  bool trace_scale_valid() const { return trace_scale_valid_; }

  /// ad(B_i) as a d x d real matrix in this basis.
  Matrix ad_basis(std::size_t i) const;

  /// Coordinates of m in the basis (real least squares through the basis Gram
  /// matrix). The relative expansion residual is written to *residual when given.
  std::vector<double> expand(const Matrix& m, double* residual = nullptr) const;

private:
  LieAlgebra() = default;

  std::string name_;
  std::string group_name_;
  bool complex_field_ = false;
  std::vector<Matrix> basis_;
  std::vector<double> structure_;  // (i*d + j)*d + k
  Matrix killing_gram_;
  double trace_scale_ = 0.0;
  bool trace_scale_valid_ = false;
  LuFactors basis_gram_lu_;
};

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Coordinate vector over a LieAlgebra basis together with its matrix
/// realization.
struct AlgebraElement {
  AlgebraPtr algebra;
  std::vector<double> coords;
  Matrix matrix;

  double coord_norm() const;
  bool is_zero(double tol = 0.0) const;
};

AlgebraElement make_element(AlgebraPtr algebra, std::vector<double> coords);
/// Expands m in the basis; throws NotInAlgebra when the expansion residual
/// exceeds tol.
AlgebraElement element_from_matrix(AlgebraPtr algebra, const Matrix& m, double tol = 1e-10);

/// Matrix commutator re-expressed in the basis; throws MixedAlgebras.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// The d x d real matrix of Y -> [X, Y] in the basis order of the algebra.
Matrix ad_matrix(const AlgebraElement& x);

/// tr(ad X . ad Y) through the precomputed structure-constant Gram matrix.
double killing_form(const AlgebraElement& x, const AlgebraElement& y);

/// Norm from the negative Killing form, sqrt(-B(X, X)).
double killing_norm(const AlgebraElement& x);

struct CertificationReport {
  double antisymmetry_residual = 0.0;
  double jacobi_residual = 0.0;
  double killing_eig_min = 0.0;
  double killing_eig_max = 0.0;
  bool semisimple = false;
  bool compact_type = false;
};

/// Checks the hypotheses everything downstream relies on: antisymmetry and
/// Jacobi residuals of the structure constants, nondegeneracy and negative
/// definiteness of the Killing form.
CertificationReport certify_compact_semisimple(const LieAlgebra& alg);

/// Registry of the built-in algebras: "so3", "su2", "so4", ..., "so8".
/// Throws UnknownGroup for anything else.
AlgebraPtr find_algebra(const std::string& name);
std::vector<std::string> registered_algebra_names();

/// JSON export/import of an algebra definition: name, dimension, basis
/// matrices as row-major arrays, structure constants as sparse triples;
/// 17-significant-digit decimals.
std::string algebra_to_json(const LieAlgebra& alg);
AlgebraPtr algebra_from_json(const std::string& text);

/// Random element with coordinates uniform in [lo, hi].
AlgebraElement random_algebra_element(const AlgebraPtr& algebra, XorShift64Star& rng,
                                      double lo = -1.0, double hi = 1.0);

}  // namespace lieflow
