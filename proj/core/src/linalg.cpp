#include "kframe/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kframe/errors.hpp"

namespace kframe {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_mass(const Matrix& h) {
  double s = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (i != j) s += std::norm(h(i, j));
  return std::sqrt(s);
}

}  // namespace

EigResult hermitian_eig(const Matrix& m) {
  if (!m.all_finite()) throw NonFinite("hermitian_eig: non-finite entries");
  if (m.rows() != m.cols()) throw DimensionMismatch("hermitian_eig: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return {{}, Matrix()};

  const double scale = m.frobenius_norm();
  {
    double herm_defect = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        herm_defect += std::norm(m(i, j) - std::conj(m(j, i)));
    if (std::sqrt(herm_defect) > kTolHermitian * std::max(scale, 1.0))
      throw NotHermitian("hermitian_eig: matrix not Hermitian within tolerance");
  }

  Matrix h = m;
  Matrix v = Matrix::identity(n);
  // symmetrize exactly so rounding in the input cannot drift the sweeps
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const complex avg = 0.5 * (h(i, j) + std::conj(h(j, i)));
      h(i, j) = avg;
      h(j, i) = std::conj(avg);
    }
    h(i, i) = complex(h(i, i).real(), 0.0);
  }

  const double stop = 1e-13 * std::max(scale, 1e-300);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_mass(h) <= stop) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const complex hpq = h(p, q);
        const double apq = std::abs(hpq);
        if (apq <= stop / n) continue;
        // phase factor makes the pivot real, then a real Jacobi rotation
        const complex w = std::conj(hpq) / apq;
        const double app = h(p, p).real();
        const double aqq = h(q, q).real();
        const double tau = (aqq - app) / (2.0 * apq);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // unitary U2 columns: (c, -s*w), (s, c*w); update H <- U2^H H U2, V <- V U2
        for (std::size_t i = 0; i < n; ++i) {
          const complex hip = h(i, p), hiq = h(i, q);
          h(i, p) = c * hip - s * w * hiq;
          h(i, q) = s * hip + c * w * hiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const complex hpj = h(p, j), hqj = h(q, j);
          h(p, j) = c * hpj - s * std::conj(w) * hqj;
          h(q, j) = s * hpj + c * std::conj(w) * hqj;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const complex vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * w * viq;
          v(i, q) = s * vip + c * w * viq;
        }
        h(p, q) = 0.0;
        h(q, p) = 0.0;
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return h(a, a).real() > h(b, b).real(); });

  EigResult r;
  r.values.resize(n);
  r.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    r.values[j] = h(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) r.vectors(i, j) = v(i, order[j]);
  }
  return r;
}

namespace {

// singular values via the smaller of M^H M / M M^H
std::vector<double> singular_values(const Matrix& m) {
  if (m.empty()) return {};
  const bool tall = m.rows() >= m.cols();
  const Matrix g = tall ? m.adjoint() * m : m * m.adjoint();
  auto eig = hermitian_eig(g);
  std::vector<double> s(eig.values.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = std::sqrt(std::max(eig.values[i], 0.0));
  return s;
}

}  // namespace

namespace {

// Gram eigenvalues carry ~eps*lambda_max of rounding noise, so the effective
// floor on squared singular values cannot go below that.
double gram_cutoff(double lmax, double tol) {
  return lmax * std::max(tol * tol, 1e-12);
}

}  // namespace

std::size_t rank(const Matrix& m, double tol) {
  if (!m.all_finite()) throw NonFinite("rank: non-finite entries");
  const auto sv = singular_values(m);
  if (sv.empty() || sv.front() == 0.0) return 0;
  const double cut = gram_cutoff(sv.front() * sv.front(), tol);
  std::size_t r = 0;
  for (double s : sv)
    if (s * s > cut) ++r;
  return r;
}

Matrix pseudo_inverse(const Matrix& m, double tol) {
  if (!m.all_finite()) throw NonFinite("pseudo_inverse: non-finite entries");
  if (m.empty()) return Matrix(m.cols(), m.rows());
  const Matrix g = m.adjoint() * m;  // cols x cols, PSD
  auto eig = hermitian_eig(g);
  const double lmax = eig.values.empty() ? 0.0 : std::max(eig.values.front(), 0.0);
  const double cut2 = gram_cutoff(lmax, tol);
  Matrix inv_core(m.cols(), m.cols());
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    if (eig.values[k] <= cut2 || eig.values[k] <= 0.0) continue;
    const double w = 1.0 / eig.values[k];
    for (std::size_t i = 0; i < m.cols(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        inv_core(i, j) += w * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
  }
  return inv_core * m.adjoint();
}

// Householder QR with column pivoting; the returned orthonormal basis is
// accurate to machine precision regardless of conditioning, unlike the
// Gram-eigenvector route.
Matrix column_space_basis(const Matrix& m, double tol) {
  if (!m.all_finite()) throw NonFinite("column_space_basis: non-finite entries");
  const std::size_t n = m.rows(), cols = m.cols();
  if (n == 0 || cols == 0) return Matrix(n, 0);

  Matrix a = m;
  std::vector<Vector> reflectors;
  double max_pivot = 0.0;
  const std::size_t steps = std::min(n, cols);
  for (std::size_t step = 0; step < steps; ++step) {
    // pivot: remaining column with the largest tail norm
    std::size_t best = step;
    double best_norm = -1.0;
    for (std::size_t j = step; j < cols; ++j) {
      double s = 0.0;
      for (std::size_t i = step; i < n; ++i) s += std::norm(a(i, j));
      if (s > best_norm) {
        best_norm = s;
        best = j;
      }
    }
    const double pivot = std::sqrt(std::max(best_norm, 0.0));
    max_pivot = std::max(max_pivot, pivot);
    if (pivot <= std::max(tol, 1e-7) * std::max(max_pivot, 0.0)) break;
    if (best != step)
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, step), a(i, best));

    // Householder vector zeroing a(step+1.., step)
    Vector v(n - step, complex(0.0));
    for (std::size_t i = step; i < n; ++i) v[i - step] = a(i, step);
    const double alpha = std::abs(v[0]);
    const complex phase = alpha > 0.0 ? v[0] / alpha : complex(1.0);
    v[0] += phase * pivot;
    const double vn = norm2(v);
    if (vn > 0.0)
      for (auto& z : v) z /= vn;
    reflectors.push_back(v);

    for (std::size_t j = step; j < cols; ++j) {
      complex dot = 0.0;
      for (std::size_t i = step; i < n; ++i) dot += std::conj(v[i - step]) * a(i, j);
      dot *= 2.0;
      for (std::size_t i = step; i < n; ++i) a(i, j) -= dot * v[i - step];
    }
  }

  const std::size_t r = reflectors.size();
  Matrix q(n, r);
  for (std::size_t j = 0; j < r; ++j) {
    Vector e(n, complex(0.0));
    e[j] = 1.0;
    for (std::size_t s = r; s-- > 0;) {
      const Vector& v = reflectors[s];
      const std::size_t off = n - v.size();
      complex dot = 0.0;
      for (std::size_t i = off; i < n; ++i) dot += std::conj(v[i - off]) * e[i];
      dot *= 2.0;
      for (std::size_t i = off; i < n; ++i) e[i] -= dot * v[i - off];
    }
    for (std::size_t i = 0; i < n; ++i) q(i, j) = e[i];
  }
  return q;
}

}  // namespace kframe
