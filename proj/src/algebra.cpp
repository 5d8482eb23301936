#include "lieflow/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "json.hpp"
#include "lieflow/format.hpp"

namespace lieflow {
namespace {

double frobenius_inner(const Matrix& a, const Matrix& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      s += (std::conj(a(i, j)) * b(i, j)).real();
  return s;
}

void check_same_algebra(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.algebra != y.algebra && (!x.algebra || !y.algebra || x.algebra->name() != y.algebra->name()))
    fail(ErrorKind::MixedAlgebras, "elements live over different algebras");
}

}  // namespace

std::shared_ptr<const LieAlgebra> LieAlgebra::create(std::string name, std::string group_name,
                                                     std::vector<Matrix> basis,
                                                     bool round_integer_constants) {
  if (basis.empty()) fail(ErrorKind::InvalidArgument, "empty basis");
  const std::size_t n = basis[0].rows();
  for (const Matrix& b : basis)
    if (!b.is_square() || b.rows() != n)
      fail(ErrorKind::InvalidArgument, "basis matrices must be square and of equal size");

  auto alg = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  alg->name_ = std::move(name);
  alg->group_name_ = std::move(group_name);
  alg->basis_ = std::move(basis);
  const std::size_t d = alg->basis_.size();
  alg->complex_field_ = false;
  for (const Matrix& b : alg->basis_)
    if (!b.is_real()) alg->complex_field_ = true;

  // Gram matrix of the basis under the real Frobenius inner product.
  Matrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) gram(i, j) = frobenius_inner(alg->basis_[i], alg->basis_[j]);
  alg->basis_gram_lu_ = lu_factor(gram);
  if (alg->basis_gram_lu_.singular)
    fail(ErrorKind::InvalidArgument, "basis matrices are linearly dependent");

  // Structure constants: re-express every commutator in the basis.
  alg->structure_.assign(d * d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const Matrix comm = commutator(alg->basis_[i], alg->basis_[j]);
      double residual = 0.0;
      std::vector<double> coords = alg->expand(comm, &residual);
      if (residual > 1e-10)
        fail(ErrorKind::InvalidArgument, "basis is not closed under the bracket");
      for (std::size_t k = 0; k < d; ++k) {
        double c = coords[k];
        if (round_integer_constants && std::abs(c - std::round(c)) < 1e-9) c = std::round(c);
        alg->structure_[(i * d + j) * d + k] = c;
        alg->structure_[(j * d + i) * d + k] = -c;
      }
    }
  }

  // Killing Gram matrix from the ad matrices.
  std::vector<Matrix> ads(d);
  for (std::size_t i = 0; i < d; ++i) ads[i] = alg->ad_basis(i);
  alg->killing_gram_ = Matrix(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      double tr = 0.0;
      for (std::size_t m = 0; m < d; ++m)
        for (std::size_t k = 0; k < d; ++k)
          tr += ads[i](m, k).real() * ads[j](k, m).real();
      alg->killing_gram_(i, j) = tr;
      alg->killing_gram_(j, i) = tr;
    }
  }

  // Proportionality constant between the Killing form and the matrix trace
  // form, when it exists (it does for every registered algebra).
  const double tr00 = (alg->basis_[0] * alg->basis_[0]).trace().real();
  if (std::abs(tr00) > 1e-14) {
    const double kappa = alg->killing_gram_(0, 0).real() / tr00;
    double max_err = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const double tr = (alg->basis_[i] * alg->basis_[j]).trace().real();
        max_err = std::max(max_err,
                           std::abs(alg->killing_gram_(i, j).real() - kappa * tr));
      }
    if (max_err < 1e-9 * std::max(1.0, alg->killing_gram_.norm_max())) {
      alg->trace_scale_ = kappa;
      alg->trace_scale_valid_ = true;
    }
  }
  return alg;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const {
  const std::size_t d = dim();
  Matrix ad(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) ad(k, j) = structure_constant(k, i, j);
  return ad;
}

std::vector<double> LieAlgebra::expand(const Matrix& m, double* residual) const {
  const std::size_t d = dim();
  Matrix rhs(d, 1);
  for (std::size_t i = 0; i < d; ++i) rhs(i, 0) = frobenius_inner(basis_[i], m);
  Matrix sol = lu_solve(basis_gram_lu_, rhs);
  std::vector<double> coords(d);
  for (std::size_t i = 0; i < d; ++i) coords[i] = sol(i, 0).real();
  if (residual) {
    Matrix recon(matrix_dim(), matrix_dim());
    for (std::size_t i = 0; i < d; ++i) recon += coords[i] * basis_[i];
    *residual = (recon - m).norm_fro() / std::max(1.0, m.norm_fro());
  }
  return coords;
}

double AlgebraElement::coord_norm() const {
  double s = 0.0;
  for (double c : coords) s += c * c;
  return std::sqrt(s);
}

bool AlgebraElement::is_zero(double tol) const {
  for (double c : coords)
    if (std::abs(c) > tol) return false;
  return true;
}

AlgebraElement make_element(AlgebraPtr algebra, std::vector<double> coords) {
  if (!algebra) fail(ErrorKind::InvalidArgument, "null algebra");
  if (coords.size() != algebra->dim())
    fail(ErrorKind::InvalidArgument, "coordinate length does not match algebra dimension");
  AlgebraElement el;
  el.matrix = Matrix(algebra->matrix_dim(), algebra->matrix_dim());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0.0) el.matrix += coords[i] * algebra->basis()[i];
  el.algebra = std::move(algebra);
  el.coords = std::move(coords);
  return el;
}

AlgebraElement element_from_matrix(AlgebraPtr algebra, const Matrix& m, double tol) {
  double residual = 0.0;
  std::vector<double> coords = algebra->expand(m, &residual);
  if (residual > tol) fail(ErrorKind::NotInAlgebra, "matrix is not in the algebra span");
  return make_element(std::move(algebra), std::move(coords));
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  check_same_algebra(x, y);
  const Matrix comm = commutator(x.matrix, y.matrix);
  double residual = 0.0;
  std::vector<double> coords = x.algebra->expand(comm, &residual);
  const double scale = std::max(1.0, x.coord_norm() * y.coord_norm());
  if (residual > 1e-12 * scale)
    fail(ErrorKind::NotInAlgebra, "commutator failed to re-express in the basis");
  return make_element(x.algebra, std::move(coords));
}

Matrix ad_matrix(const AlgebraElement& x) {
  const std::size_t d = x.algebra->dim();
  Matrix ad(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const double xi = x.coords[i];
    if (xi == 0.0) continue;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) ad(k, j) += xi * x.algebra->structure_constant(k, i, j);
  }
  return ad;
}

double killing_form(const AlgebraElement& x, const AlgebraElement& y) {
  check_same_algebra(x, y);
  const Matrix& gram = x.algebra->killing_gram();
  double s = 0.0;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (x.coords[i] == 0.0) continue;
    for (std::size_t j = 0; j < y.coords.size(); ++j)
      s += x.coords[i] * gram(i, j).real() * y.coords[j];
  }
  return s;
}

double killing_norm(const AlgebraElement& x) {
  const double q = -killing_form(x, x);
  return q > 0.0 ? std::sqrt(q) : 0.0;
}

CertificationReport certify_compact_semisimple(const LieAlgebra& alg) {
  CertificationReport report;
  const std::size_t d = alg.dim();

  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        report.antisymmetry_residual =
            std::max(report.antisymmetry_residual,
                     std::abs(alg.structure_constant(k, i, j) + alg.structure_constant(k, j, i)));

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        const Matrix& bi = alg.basis()[i];
        const Matrix& bj = alg.basis()[j];
        const Matrix& bk = alg.basis()[k];
        const Matrix residual = commutator(commutator(bi, bj), bk) +
                                commutator(commutator(bj, bk), bi) +
                                commutator(commutator(bk, bi), bj);
        report.jacobi_residual = std::max(report.jacobi_residual, residual.norm_fro());
      }

  const std::vector<cplx> eigs = eigenvalues(alg.killing_gram());
  report.killing_eig_min = eigs.front().real();
  report.killing_eig_max = eigs.front().real();
  double max_mag = 0.0;
  for (const cplx& e : eigs) {
    report.killing_eig_min = std::min(report.killing_eig_min, e.real());
    report.killing_eig_max = std::max(report.killing_eig_max, e.real());
    max_mag = std::max(max_mag, std::abs(e.real()));
  }
  const double rank_tol = 1e-8 * std::max(1.0, alg.killing_gram().norm_inf());
  report.semisimple = numerical_rank(alg.killing_gram(), rank_tol) == d;
  report.compact_type = report.semisimple && report.killing_eig_max < -rank_tol;
  return report;
}

namespace {

AlgebraPtr make_so3() {
  Matrix lx = Matrix::from_real(3, 3, {0, 0, 0, 0, 0, -1, 0, 1, 0});
  Matrix ly = Matrix::from_real(3, 3, {0, 0, 1, 0, 0, 0, -1, 0, 0});
  Matrix lz = Matrix::from_real(3, 3, {0, -1, 0, 1, 0, 0, 0, 0, 0});
  return LieAlgebra::create("so3", "SO(3)", {lx, ly, lz});
}

AlgebraPtr make_su2() {
  const cplx i2(0.0, 0.5);
  Matrix e1 = Matrix::from_complex(2, 2, {i2, 0.0, 0.0, -i2});
  Matrix e2 = Matrix::from_complex(2, 2, {0.0, 0.5, -0.5, 0.0});
  Matrix e3 = Matrix::from_complex(2, 2, {0.0, i2, i2, 0.0});
  return LieAlgebra::create("su2", "SU(2)", {e1, e2, e3});
}

AlgebraPtr make_so_n(std::size_t n) {
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix e(n, n);
      e(j, i) = 1.0;
      e(i, j) = -1.0;
      basis.push_back(std::move(e));
    }
  std::ostringstream name, group;
  name << "so" << n;
  group << "SO(" << n << ")";
  return LieAlgebra::create(name.str(), group.str(), std::move(basis));
}

std::map<std::string, AlgebraPtr>& registry_storage() {
  static std::map<std::string, AlgebraPtr> reg;
  return reg;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

AlgebraPtr find_algebra(const std::string& name) {
  std::string key = name;
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& reg = registry_storage();
  auto it = reg.find(key);
  if (it != reg.end()) return it->second;

  AlgebraPtr alg;
  if (key == "so3")
    alg = make_so3();
  else if (key == "su2")
    alg = make_su2();
  else if (key.size() == 3 && key[0] == 's' && key[1] == 'o' && key[2] >= '4' && key[2] <= '8')
    alg = make_so_n(static_cast<std::size_t>(key[2] - '0'));
  else
    fail(ErrorKind::UnknownGroup, "unknown group '" + name + "' (so3, su2, so4..so8)");
  reg[key] = alg;
  return alg;
}

std::vector<std::string> registered_algebra_names() {
  return {"so3", "su2", "so4", "so5", "so6", "so7", "so8"};
}

std::string algebra_to_json(const LieAlgebra& alg) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"name\": \"" << alg.name() << "\",\n";
  out << "  \"group\": \"" << alg.group_name() << "\",\n";
  out << "  \"dimension\": " << alg.dim() << ",\n";
  out << "  \"matrix_dimension\": " << alg.matrix_dim() << ",\n";
  out << "  \"field\": \"" << (alg.complex_field() ? "complex" : "real") << "\",\n";
  out << "  \"basis\": [";
  for (std::size_t b = 0; b < alg.dim(); ++b) {
    out << (b ? ", " : "") << "[";
    const Matrix& m = alg.basis()[b];
    bool first = true;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!first) out << ", ";
        first = false;
        if (alg.complex_field())
          out << "[" << fmt17(m(i, j).real()) << ", " << fmt17(m(i, j).imag()) << "]";
        else
          out << fmt17(m(i, j).real());
      }
    out << "]";
  }
  out << "],\n";
  out << "  \"structure_constants\": [";
  bool first = true;
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = i + 1; j < alg.dim(); ++j)
      for (std::size_t k = 0; k < alg.dim(); ++k) {
        const double c = alg.structure_constant(k, i, j);
        if (c == 0.0) continue;
        if (!first) out << ", ";
        first = false;
        out << "[" << i << ", " << j << ", " << k << ", " << fmt17(c) << "]";
      }
  out << "]\n}\n";
  return out.str();
}

AlgebraPtr algebra_from_json(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  const std::size_t n = doc.at("matrix_dimension").get<std::size_t>();
  const std::size_t d = doc.at("dimension").get<std::size_t>();
  const bool complex_field = doc.at("field").get<std::string>() == "complex";
  const auto& basis_json = doc.at("basis");
  if (basis_json.size() != d) fail(ErrorKind::InvalidArgument, "basis count mismatch in JSON");

  std::vector<Matrix> basis;
  basis.reserve(d);
  for (const auto& arr : basis_json) {
    if (arr.size() != n * n) fail(ErrorKind::InvalidArgument, "basis entry count mismatch in JSON");
    Matrix m(n, n);
    std::size_t k = 0;
    for (const auto& entry : arr) {
      const std::size_t i = k / n, j = k % n;
      if (complex_field)
        m(i, j) = cplx(entry.at(0).get<double>(), entry.at(1).get<double>());
      else
        m(i, j) = entry.get<double>();
      ++k;
    }
    basis.push_back(std::move(m));
  }
  AlgebraPtr alg = LieAlgebra::create(doc.at("name").get<std::string>(),
                                      doc.value("group", std::string("imported")), std::move(basis),
                                      /*round_integer_constants=*/false);

  // When the document carries structure constants, cross-check them against
  // the ones recomputed from the basis.
  if (doc.contains("structure_constants")) {
    for (const auto& triple : doc.at("structure_constants")) {
      const std::size_t i = triple.at(0).get<std::size_t>();
      const std::size_t j = triple.at(1).get<std::size_t>();
      const std::size_t k = triple.at(2).get<std::size_t>();
      const double c = triple.at(3).get<double>();
      if (std::abs(alg->structure_constant(k, i, j) - c) > 1e-9)
        fail(ErrorKind::InvalidArgument, "structure constants in JSON disagree with the basis");
    }
  }
  return alg;
}

AlgebraElement random_algebra_element(const AlgebraPtr& algebra, XorShift64Star& rng, double lo,
                                      double hi) {
  std::vector<double> coords(algebra->dim());
  for (double& c : coords) c = rng.uniform(lo, hi);
  return make_element(algebra, std::move(coords));
}

}  // namespace lieflow
