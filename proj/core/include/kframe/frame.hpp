#ifndef KFRAME_FRAME_HPP
#define KFRAME_FRAME_HPP

#include <array>
#include <cstddef>

#include "kframe/matrix.hpp"
#include "kframe/space.hpp"

namespace kframe {

/// A finite ordered family of vectors in a Pontryagin space. The synthesis
/// matrix holds vector n as column n; coefficients live in standard_space(k).
struct VectorFamily {
  PontryaginSpace space;
  Matrix synthesis;  // space.dim() x k

  std::size_t k() const { return synthesis.cols(); }
  Vector vector(std::size_t n) const { return synthesis.column(n); }
};

VectorFamily make_family(const PontryaginSpace& space, const Matrix& synthesis);

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool tight = false;
  bool exact = false;
};

struct ValidationResult {
  bool is_frame = false;
  FrameBounds bounds;     // meaningful only when is_frame
  std::size_t rank = 0;   // rank of the synthesis matrix
};

Vector synthesize(const VectorFamily& f, const Vector& alpha);

/// Analysis operator value Jt([x_n, x])_n in standard_space(k).
Vector analyze(const VectorFamily& f, const Vector& x);

/// The analysis operator as a matrix: Jt * X^H * J.
Matrix analysis_matrix(const VectorFamily& f);

/// S = T Jt T^[*]; self-adjoint for the indefinite product.
Matrix frame_operator(const VectorFamily& f);

/// S_J = X X^H, the frame operator of the family in the associated Hilbert
/// space; frame_operator(f) == hilbert_frame_operator(f) * J.
Matrix hilbert_frame_operator(const VectorFamily& f);

/// Frame test with optimal bounds. Not being a frame is a result, not an error.
ValidationResult validate(const VectorFamily& f, double tol = 1e-10);

/// Optimal bounds computed independently for the four equivalent formulations:
/// {x_n} Pontryagin, {Jx_n} Pontryagin, {x_n} Hilbert, {Jx_n} Hilbert.
std::array<FrameBounds, 4> four_formulations_bounds(const VectorFamily& f);

/// Canonical-dual reconstruction; identity on frames up to conditioning.
Vector reconstruct(const VectorFamily& f, const Vector& x);

/// Family {J x_n} on the same space.
VectorFamily symmetry_image(const VectorFamily& f);

}  // namespace kframe

#endif
