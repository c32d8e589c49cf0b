#include "kframe/space.hpp"

#include <cmath>

#include "kframe/errors.hpp"
#include "kframe/linalg.hpp"

namespace kframe {

PontryaginSpace::PontryaginSpace(std::vector<int> signature, bool strict_pontryagin)
    : signature_(std::move(signature)) {
  for (int s : signature_) {
    if (s == 1)
      ++p_;
    else if (s == -1)
      ++q_;
    else
      throw InvalidDimension("PontryaginSpace: signature entries must be +1 or -1");
  }
  if (strict_pontryagin && (p_ == 0 || q_ == 0))
    throw InvalidDimension("PontryaginSpace: strict mode requires both signs present");
}

Matrix PontryaginSpace::fundamental_symmetry() const {
  Matrix j(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) j(i, i) = static_cast<double>(signature_[i]);
  return j;
}

Vector PontryaginSpace::apply_symmetry(const Vector& x) const {
  if (x.size() != dim()) throw DimensionMismatch("apply_symmetry: dimension mismatch");
  Vector r(x);
  for (std::size_t i = 0; i < dim(); ++i)
    if (signature_[i] < 0) r[i] = -r[i];
  return r;
}

Matrix PontryaginSpace::apply_symmetry(const Matrix& m) const {
  if (m.rows() != dim()) throw DimensionMismatch("apply_symmetry: row count mismatch");
  Matrix r = m;
  for (std::size_t i = 0; i < dim(); ++i)
    if (signature_[i] < 0)
      for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = -r(i, j);
  return r;
}

PontryaginSpace standard_space(std::size_t k) {
  if (k == 0) throw InvalidDimension("standard_space: dimension must be positive");
  std::vector<int> sig(k);
  for (std::size_t n = 0; n < k; ++n) sig[n] = (n % 2 == 0) ? 1 : -1;
  return PontryaginSpace(std::move(sig));
}

PontryaginSpace hilbert_space(std::size_t k) {
  return PontryaginSpace(std::vector<int>(k, 1));
}

complex indefinite_inner(const PontryaginSpace& space, const Vector& x, const Vector& y) {
  if (x.size() != space.dim() || y.size() != space.dim())
    throw DimensionMismatch("indefinite_inner: dimension mismatch");
  complex s = 0.0;
  for (std::size_t n = 0; n < space.dim(); ++n)
    s += static_cast<double>(space.signature()[n]) * x[n] * std::conj(y[n]);
  return s;
}

complex hilbert_inner(const PontryaginSpace& space, const Vector& x, const Vector& y) {
  if (x.size() != space.dim() || y.size() != space.dim())
    throw DimensionMismatch("hilbert_inner: dimension mismatch");
  return dot_hermitian(x, y);
}

double j_norm(const PontryaginSpace& space, const Vector& x) {
  if (x.size() != space.dim()) throw DimensionMismatch("j_norm: dimension mismatch");
  return norm2(x);
}

Matrix j_adjoint(const PontryaginSpace& domain, const PontryaginSpace& codomain,
                 const Matrix& m) {
  if (m.cols() != domain.dim() || m.rows() != codomain.dim())
    throw DimensionMismatch("j_adjoint: operator shape does not match the spaces");
  // J_dom * M^H * J_cod; both symmetries are diagonal sign flips
  Matrix a = m.adjoint();
  a = domain.apply_symmetry(a);
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (codomain.signature()[j] < 0)
      for (std::size_t i = 0; i < a.rows(); ++i) a(i, j) = -a(i, j);
  return a;
}

Subspace make_subspace(const PontryaginSpace& ambient, const Matrix& spanning, double tol) {
  if (spanning.rows() != ambient.dim())
    throw DimensionMismatch("make_subspace: spanning vectors have wrong dimension");
  return Subspace{ambient, column_space_basis(spanning, tol)};
}

Subspace j_orthogonal_complement(const Subspace& v) {
  const std::size_t n = v.ambient.dim();
  const Matrix b = v.basis;
  // Hilbert complement as the range of I - B B^H, then V^[perp] = J V^perp
  Matrix residual = Matrix::identity(n) - b * b.adjoint();
  Matrix perp = column_space_basis(residual);
  return Subspace{v.ambient, v.ambient.apply_symmetry(perp)};
}

Matrix j_orthogonal_projection(const Subspace& v) {
  const std::size_t n = v.ambient.dim();
  if (v.dim() == 0) return Matrix(n, n);
  const Matrix b = v.basis;
  const Matrix jb = v.ambient.apply_symmetry(b);
  const Matrix gram = b.adjoint() * jb;  // Hermitian since J is
  auto eig = hermitian_eig(gram);
  double amax = 0.0, amin = 0.0;
  for (std::size_t i = 0; i < eig.values.size(); ++i) {
    const double a = std::abs(eig.values[i]);
    amax = std::max(amax, a);
    amin = (i == 0) ? a : std::min(amin, a);
  }
  // basis columns are orthonormal, so the Gram's natural scale is 1
  if (amax == 0.0 || amin < 1e-10)
    throw DegenerateSubspace(
        "j_orthogonal_projection: indefinite Gram is singular, subspace is degenerate");
  Matrix ginv(gram.rows(), gram.cols());
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    const double w = 1.0 / eig.values[k];
    for (std::size_t i = 0; i < gram.rows(); ++i)
      for (std::size_t j = 0; j < gram.cols(); ++j)
        ginv(i, j) += w * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
  }
  return b * ginv * jb.adjoint();
}

Vector j_orthonormal_expansion(const PontryaginSpace& space,
                               const std::vector<Vector>& basis_vectors, const Vector& x) {
  if (basis_vectors.size() != space.dim())
    throw DimensionMismatch("j_orthonormal_expansion: need exactly dim basis vectors");
  const std::size_t n = space.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const complex g = indefinite_inner(space, basis_vectors[i], basis_vectors[j]);
      const double expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(std::abs(g) - expected) > 1e-10)
        throw NotJOrthonormal("j_orthonormal_expansion: Gram is not +-identity");
    }
  }
  Vector c(n);
  for (std::size_t k = 0; k < n; ++k) {
    const complex self = indefinite_inner(space, basis_vectors[k], basis_vectors[k]);
    c[k] = self * indefinite_inner(space, x, basis_vectors[k]);
  }
  return c;
}

Vector ProductSpace::embed_left(const Vector& x) const {
  if (x.size() != left_dim) throw DimensionMismatch("embed_left: dimension mismatch");
  Vector z(left_dim + right_dim, complex(0.0));
  for (std::size_t i = 0; i < left_dim; ++i) z[i] = x[i];
  return z;
}

Vector ProductSpace::embed_right(const Vector& y) const {
  if (y.size() != right_dim) throw DimensionMismatch("embed_right: dimension mismatch");
  Vector z(left_dim + right_dim, complex(0.0));
  for (std::size_t i = 0; i < right_dim; ++i) z[left_dim + i] = y[i];
  return z;
}

Vector ProductSpace::project_left(const Vector& z) const {
  if (z.size() != left_dim + right_dim) throw DimensionMismatch("project_left: dimension mismatch");
  return Vector(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(left_dim));
}

Vector ProductSpace::project_right(const Vector& z) const {
  if (z.size() != left_dim + right_dim)
    throw DimensionMismatch("project_right: dimension mismatch");
  return Vector(z.begin() + static_cast<std::ptrdiff_t>(left_dim), z.end());
}

ProductSpace product_space(const PontryaginSpace& k, const PontryaginSpace& h) {
  std::vector<int> sig = k.signature();
  sig.insert(sig.end(), h.signature().begin(), h.signature().end());
  return ProductSpace{PontryaginSpace(std::move(sig)), k.dim(), h.dim()};
}

}  // namespace kframe
