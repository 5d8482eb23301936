#include "lieflow/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lieflow {
namespace {

// Householder reduction to upper Hessenberg form, in place.
void hessenberg_reduce(Matrix& a) {
  const std::size_t n = a.rows();
  if (n < 3) return;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double colnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) colnorm += std::norm(a(i, k));
    colnorm = std::sqrt(colnorm);
    if (colnorm == 0.0) continue;

    std::vector<cplx> v(n - k - 1);
    for (std::size_t i = k + 1; i < n; ++i) v[i - k - 1] = a(i, k);
    const cplx x0 = v[0];
    const cplx phase = (std::abs(x0) == 0.0) ? cplx(1.0) : x0 / std::abs(x0);
    v[0] += phase * colnorm;
    double vnorm2 = 0.0;
    for (const auto& c : v) vnorm2 += std::norm(c);
    if (vnorm2 == 0.0) continue;

    // A <- (I - 2 v v^H / v^H v) A
    for (std::size_t j = k; j < n; ++j) {
      cplx dot = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) dot += std::conj(v[i]) * a(k + 1 + i, j);
      dot *= 2.0 / vnorm2;
      for (std::size_t i = 0; i < v.size(); ++i) a(k + 1 + i, j) -= dot * v[i];
    }
    // A <- A (I - 2 v v^H / v^H v)
    for (std::size_t i = 0; i < n; ++i) {
      cplx dot = 0.0;
      for (std::size_t j = 0; j < v.size(); ++j) dot += a(i, k + 1 + j) * v[j];
      dot *= 2.0 / vnorm2;
      for (std::size_t j = 0; j < v.size(); ++j) a(i, k + 1 + j) -= dot * std::conj(v[j]);
    }
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }
}

// Eigenvalues of a 2x2 block by the quadratic formula.
void eig2x2(cplx p, cplx q, cplx r, cplx s, cplx& l1, cplx& l2) {
  const cplx tr = p + s;
  const cplx det = p * s - q * r;
  cplx disc = std::sqrt(tr * tr - 4.0 * det);
  // pick the sign giving the larger magnitude for stable deflation
  const cplx root_a = (tr + disc) / 2.0;
  const cplx root_b = (tr - disc) / 2.0;
  if (std::abs(root_a) >= std::abs(root_b)) {
    l1 = root_a;
    l2 = (std::abs(root_a) > 0.0) ? det / root_a : root_b;
  } else {
    l1 = root_b;
    l2 = (std::abs(root_b) > 0.0) ? det / root_b : root_a;
  }
}

// Shifted QR sweep on the active Hessenberg block [lo, hi] via Givens rotations.
void qr_sweep(Matrix& h, std::size_t lo, std::size_t hi, cplx shift) {
  const std::size_t m = hi - lo + 1;
  for (std::size_t i = lo; i <= hi; ++i) h(i, i) -= shift;

  std::vector<double> cs(m - 1);
  std::vector<cplx> sn(m - 1);
  // QR factorization: zero the subdiagonal
  for (std::size_t k = lo; k < hi; ++k) {
    const cplx a = h(k, k);
    const cplx b = h(k + 1, k);
    const double r = std::sqrt(std::norm(a) + std::norm(b));
    double c;
    cplx s;
    if (r == 0.0) {
      c = 1.0;
      s = 0.0;
    } else if (std::abs(a) == 0.0) {
      c = 0.0;
      s = std::conj(b) / std::abs(b);
    } else {
      c = std::abs(a) / r;
      s = (a / std::abs(a)) * std::conj(b) / r;
    }
    cs[k - lo] = c;
    sn[k - lo] = s;
    for (std::size_t j = k; j <= hi; ++j) {
      const cplx t1 = h(k, j);
      const cplx t2 = h(k + 1, j);
      h(k, j) = c * t1 + s * t2;
      h(k + 1, j) = -std::conj(s) * t1 + c * t2;
    }
  }
  // RQ: apply the conjugated rotations on the right; rows below k+1 are
  // still zero in columns k, k+1 at this point.
  for (std::size_t k = lo; k < hi; ++k) {
    const double c = cs[k - lo];
    const cplx s = sn[k - lo];
    const std::size_t last_row = std::min(hi, k + 1);
    for (std::size_t i = lo; i <= last_row; ++i) {
      const cplx t1 = h(i, k);
      const cplx t2 = h(i, k + 1);
      h(i, k) = c * t1 + std::conj(s) * t2;
      h(i, k + 1) = -s * t1 + c * t2;
    }
  }
  for (std::size_t i = lo; i <= hi; ++i) h(i, i) += shift;
}

std::vector<cplx> qr_eigenvalues(Matrix h) {
  const std::size_t n = h.rows();
  std::vector<cplx> out;
  out.reserve(n);
  if (n == 0) return out;

  const double eps = 2.0 * std::numeric_limits<double>::epsilon();
  std::size_t budget = 100 * n * n;
  std::size_t hi = n - 1;
  std::size_t iter_this_block = 0;

  while (true) {
    // deflate trivially small subdiagonals
    for (std::size_t i = hi; i > 0; --i) {
      const double s = std::abs(h(i - 1, i - 1)) + std::abs(h(i, i));
      const double gate = eps * (s > 0.0 ? s : h.norm_inf());
      if (std::abs(h(i, i - 1)) <= gate) h(i, i - 1) = 0.0;
    }
    // find the active block [lo, hi]
    std::size_t lo = hi;
    while (lo > 0 && h(lo, lo - 1) != 0.0) --lo;

    if (lo == hi) {
      out.push_back(h(hi, hi));
      if (hi == 0) break;
      --hi;
      iter_this_block = 0;
      continue;
    }
    if (hi - lo == 1) {
      cplx l1, l2;
      eig2x2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi), l1, l2);
      out.push_back(l1);
      out.push_back(l2);
      if (lo == 0) break;
      hi = lo - 1;
      iter_this_block = 0;
      continue;
    }

    if (budget == 0) fail(ErrorKind::NoConvergence, "QR iteration budget exhausted");
    --budget;
    ++iter_this_block;

    // Wilkinson shift from the trailing 2x2; occasional exceptional shift.
    cplx shift;
    if (iter_this_block % 20 == 19) {
      shift = cplx(std::abs(h(hi, hi - 1)) + std::abs(h(hi - 1, hi - 2)), 0.0);
    } else {
      cplx l1, l2;
      eig2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi), l1, l2);
      shift = (std::abs(l1 - h(hi, hi)) < std::abs(l2 - h(hi, hi))) ? l1 : l2;
    }
    qr_sweep(h, lo, hi, shift);
  }
  return out;
}

// For a real input matrix, force the eigenvalue set to be closed under
// conjugation exactly: greedily pair each value with its nearest conjugate
// and average; values with negligible imaginary part become exactly real.
std::vector<cplx> symmetrize_conjugate_pairs(std::vector<cplx> vals, double scale) {
  const double tiny_imag = 1e-10 * std::max(1.0, scale);
  std::vector<cplx> out;
  out.reserve(vals.size());
  while (!vals.empty()) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < vals.size(); ++i)
      if (std::abs(vals[i].imag()) > std::abs(vals[k].imag())) k = i;
    const cplx v = vals[k];
    vals.erase(vals.begin() + static_cast<std::ptrdiff_t>(k));
    if (std::abs(v.imag()) <= tiny_imag) {
      out.emplace_back(v.real(), 0.0);
      continue;
    }
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < vals.size(); ++i) {
      const double dist = std::abs(vals[i] - std::conj(v));
      if (dist < best_dist) {
        best_dist = dist;
        best = i;
      }
    }
    if (vals.empty()) {  // odd leftover; treat as real
      out.emplace_back(v.real(), 0.0);
      continue;
    }
    const cplx w = vals[best];
    vals.erase(vals.begin() + static_cast<std::ptrdiff_t>(best));
    const double re = 0.5 * (v.real() + w.real());
    const double im = 0.5 * (std::abs(v.imag()) + std::abs(w.imag()));
    out.emplace_back(re, im);
    out.emplace_back(re, -im);
  }
  return out;
}

struct Cluster {
  cplx center;
  std::size_t count = 0;
};

std::vector<Cluster> cluster_values(const std::vector<cplx>& vals, double tol) {
  std::vector<Cluster> clusters;
  std::vector<cplx> sums;
  for (const cplx& v : vals) {
    bool placed = false;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (std::abs(v - clusters[c].center) <= tol) {
        sums[c] += v;
        ++clusters[c].count;
        clusters[c].center = sums[c] * (1.0 / static_cast<double>(clusters[c].count));
        placed = true;
        break;
      }
    }
    if (!placed) {
      clusters.push_back({v, 1});
      sums.push_back(v);
    }
  }
  return clusters;
}

}  // namespace

std::size_t Spectrum::total_algebraic() const {
  std::size_t total = 0;
  for (const auto& e : eigenvalues) total += e.algebraic;
  return total;
}

std::vector<cplx> eigenvalues(const Matrix& a) {
  if (!a.is_square()) fail(ErrorKind::NonSquare, "eigenvalues needs a square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return {};
  if (n == 1) return {a(0, 0)};
  Matrix h = a;
  hessenberg_reduce(h);
  std::vector<cplx> vals = qr_eigenvalues(std::move(h));
  if (a.is_real()) vals = symmetrize_conjugate_pairs(std::move(vals), a.norm_inf());
  return vals;
}

std::size_t numerical_rank(Matrix a, double tol) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t rank = 0;
  std::vector<bool> row_used(rows, false), col_used(cols, false);
  for (std::size_t step = 0; step < std::min(rows, cols); ++step) {
    // full pivoting
    std::size_t pi = 0, pj = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (row_used[i]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (col_used[j]) continue;
        const double mag = std::abs(a(i, j));
        if (mag > best) {
          best = mag;
          pi = i;
          pj = j;
        }
      }
    }
    if (best <= tol) break;
    ++rank;
    row_used[pi] = true;
    col_used[pj] = true;
    const cplx piv = a(pi, pj);
    for (std::size_t i = 0; i < rows; ++i) {
      if (row_used[i] || a(i, pj) == 0.0) continue;
      const cplx m = a(i, pj) / piv;
      for (std::size_t j = 0; j < cols; ++j)
        if (!col_used[j]) a(i, j) -= m * a(pi, j);
      a(i, pj) = 0.0;
    }
  }
  return rank;
}

Spectrum eigen_decompose(const Matrix& a) {
  if (!a.is_square()) fail(ErrorKind::NonSquare, "eigen_decompose needs a square matrix");
  const std::size_t n = a.rows();
  Spectrum spec;
  spec.dimension = n;
  if (n == 0) {
    spec.diagonalizable = true;
    return spec;
  }

  const double scale = a.norm_inf();
  const double cluster_tol = 1e-8 * std::max(1.0, scale);
  std::vector<cplx> vals = eigenvalues(a);

  std::vector<Cluster> clusters;
  if (a.is_real()) {
    // The raw values are exactly real or exact conjugate pairs; cluster the
    // reals and the upper half plane, then mirror, so the reported distinct
    // values stay exactly closed under conjugation.
    std::vector<cplx> reals, upper;
    for (const cplx& v : vals) {
      if (v.imag() > 0.0)
        upper.push_back(v);
      else if (v.imag() == 0.0)
        reals.push_back(v);
    }
    for (const Cluster& c : cluster_values(reals, cluster_tol))
      clusters.push_back({cplx(c.center.real(), 0.0), c.count});
    for (const Cluster& c : cluster_values(upper, cluster_tol)) {
      clusters.push_back(c);
      clusters.push_back({std::conj(c.center), c.count});
    }
  } else {
    clusters = cluster_values(vals, cluster_tol);
  }

  spec.eigenvalues.reserve(clusters.size());
  for (const Cluster& c : clusters) {
    EigenValue ev;
    ev.value = c.center;
    ev.algebraic = c.count;
    Matrix shifted = a;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= c.center;
    const double rank_tol = 1e-8 * std::max(1.0, shifted.norm_inf());
    const std::size_t rank = numerical_rank(shifted, rank_tol);
    std::size_t geo = (rank < n) ? n - rank : 1;
    geo = std::max<std::size_t>(1, std::min(geo, ev.algebraic));
    ev.geometric = geo;
    spec.eigenvalues.push_back(ev);
  }

  spec.diagonalizable = true;
  for (const auto& e : spec.eigenvalues)
    if (e.geometric != e.algebraic) spec.diagonalizable = false;
  return spec;
}

bool spectrum_is_hyperbolic(const Matrix& a, double tol) {
  const double gate = tol * std::max(1.0, a.norm_inf());
  for (const cplx& v : eigenvalues(a))
    if (std::abs(v.real()) <= gate) return false;
  return true;
}

}  // namespace lieflow
