#ifndef KFRAME_SPACE_HPP
#define KFRAME_SPACE_HPP

#include <cstddef>
#include <vector>

#include "kframe/matrix.hpp"

namespace kframe {

/// Finite-dimensional space with an indefinite inner product given by a
/// diagonal +-1 fundamental symmetry. q == 0 (pure Hilbert) is allowed
/// unless strict_pontryagin is requested at construction.
class PontryaginSpace {
 public:
  PontryaginSpace() = default;
  explicit PontryaginSpace(std::vector<int> signature, bool strict_pontryagin = false);

  std::size_t dim() const { return signature_.size(); }
  const std::vector<int>& signature() const { return signature_; }
  std::size_t positive_count() const { return p_; }
  std::size_t negative_count() const { return q_; }

  Matrix fundamental_symmetry() const;
  Vector apply_symmetry(const Vector& x) const;
  Matrix apply_symmetry(const Matrix& m) const;  // J * M (column-wise sign flips)

  bool operator==(const PontryaginSpace& o) const { return signature_ == o.signature_; }

 private:
  std::vector<int> signature_;
  std::size_t p_ = 0, q_ = 0;
};

/// The space C^k with the alternating-signature indefinite product.
PontryaginSpace standard_space(std::size_t k);

/// All-positive signature (plain Hilbert space in the same interface).
PontryaginSpace hilbert_space(std::size_t k);

complex indefinite_inner(const PontryaginSpace& space, const Vector& x, const Vector& y);
complex hilbert_inner(const PontryaginSpace& space, const Vector& x, const Vector& y);
double j_norm(const PontryaginSpace& space, const Vector& x);

/// Adjoint with respect to the indefinite products: J_dom * M^H * J_codom
/// for M mapping domain -> codomain.
Matrix j_adjoint(const PontryaginSpace& domain, const PontryaginSpace& codomain, const Matrix& m);

struct Subspace {
  PontryaginSpace ambient;
  Matrix basis;  // Hilbert-orthonormal columns
  std::size_t dim() const { return basis.cols(); }
};

/// Orthonormalizes the columns of `spanning` into a Subspace.
Subspace make_subspace(const PontryaginSpace& ambient, const Matrix& spanning,
                       double tol = 1e-10);

Subspace j_orthogonal_complement(const Subspace& v);

/// The J-orthogonal projection onto span(V). Throws DegenerateSubspace when
/// the indefinite Gram of the basis is singular (neutral directions in V).
Matrix j_orthogonal_projection(const Subspace& v);

/// Coefficients c_n = [e_n,e_n][x,e_n] of the J-orthonormal expansion of x.
Vector j_orthonormal_expansion(const PontryaginSpace& space,
                               const std::vector<Vector>& basis_vectors, const Vector& x);

struct ProductSpace {
  PontryaginSpace space;
  std::size_t left_dim = 0;   // coordinates [0, left_dim) hold the first factor
  std::size_t right_dim = 0;  // coordinates [left_dim, left_dim+right_dim)

  Vector embed_left(const Vector& x) const;
  Vector embed_right(const Vector& y) const;
  Vector project_left(const Vector& z) const;
  Vector project_right(const Vector& z) const;
};

ProductSpace product_space(const PontryaginSpace& k, const PontryaginSpace& h);

}  // namespace kframe

#endif
