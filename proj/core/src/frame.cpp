#include "kframe/frame.hpp"

#include <cmath>

#include "kframe/errors.hpp"
#include "kframe/linalg.hpp"

namespace kframe {

VectorFamily make_family(const PontryaginSpace& space, const Matrix& synthesis) {
  if (synthesis.rows() != space.dim())
    throw DimensionMismatch("make_family: vectors do not match the space dimension");
  if (synthesis.cols() == 0) throw InvalidDimension("make_family: empty family");
  if (!synthesis.all_finite()) throw NonFinite("make_family: non-finite entries");
  return VectorFamily{space, synthesis};
}

Vector synthesize(const VectorFamily& f, const Vector& alpha) {
  if (alpha.size() != f.k()) throw DimensionMismatch("synthesize: coefficient count mismatch");
  return f.synthesis.apply(alpha);
}

Vector analyze(const VectorFamily& f, const Vector& x) {
  if (x.size() != f.space.dim()) throw DimensionMismatch("analyze: vector dimension mismatch");
  const PontryaginSpace coeff = standard_space(f.k());
  // entry n pairs x against the n-th family vector, matching Jt X^H J x
  Vector r(f.k());
  for (std::size_t n = 0; n < f.k(); ++n)
    r[n] = indefinite_inner(f.space, x, f.vector(n));
  return coeff.apply_symmetry(r);
}

Matrix analysis_matrix(const VectorFamily& f) {
  return j_adjoint(standard_space(f.k()), f.space, f.synthesis);
}

Matrix frame_operator(const VectorFamily& f) {
  const Matrix jt = standard_space(f.k()).fundamental_symmetry();
  return f.synthesis * jt * analysis_matrix(f);
}

Matrix hilbert_frame_operator(const VectorFamily& f) {
  return f.synthesis * f.synthesis.adjoint();
}

ValidationResult validate(const VectorFamily& f, double tol) {
  ValidationResult res;
  res.rank = rank(f.synthesis, tol);
  if (res.rank < f.space.dim()) return res;
  res.is_frame = true;

  auto eig = hermitian_eig(hilbert_frame_operator(f));
  res.bounds.upper = eig.values.front();
  res.bounds.lower = eig.values.back();
  res.bounds.tight =
      std::abs(res.bounds.upper - res.bounds.lower) <= 1e-9 * res.bounds.upper;

  // exact iff every leave-one-out family fails to span
  res.bounds.exact = true;
  for (std::size_t j = 0; j < f.k() && res.bounds.exact; ++j) {
    if (f.k() == 1) break;  // removing the only vector trivially destroys spanning
    if (rank(f.synthesis.drop_column(j), tol) >= f.space.dim()) res.bounds.exact = false;
  }
  return res;
}

std::array<FrameBounds, 4> four_formulations_bounds(const VectorFamily& f) {
  auto check = validate(f);
  if (!check.is_frame) throw NotFrameError("four_formulations_bounds: family is not a frame");

  const Matrix x = f.synthesis;
  const Matrix jx = f.space.apply_symmetry(x);
  const auto sandwich = [&](const Matrix& m) {  // J M J for the diagonal symmetry
    Matrix r = m;
    const auto& sig = f.space.signature();
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j)
        r(i, j) *= static_cast<double>(sig[i] * sig[j]);
    return r;
  };
  // quadratic-form matrix of each defining inequality
  const Matrix forms[4] = {
      sandwich(x * x.adjoint()),
      sandwich(jx * jx.adjoint()),
      x * x.adjoint(),
      jx * jx.adjoint(),
  };
  std::array<FrameBounds, 4> out;
  for (int i = 0; i < 4; ++i) {
    auto eig = hermitian_eig(forms[i]);
    out[i].lower = eig.values.back();
    out[i].upper = eig.values.front();
    out[i].tight = std::abs(out[i].upper - out[i].lower) <= 1e-9 * out[i].upper;
    out[i].exact = check.bounds.exact;
  }
  return out;
}

Vector reconstruct(const VectorFamily& f, const Vector& x) {
  if (x.size() != f.space.dim()) throw DimensionMismatch("reconstruct: dimension mismatch");
  auto check = validate(f);
  if (!check.is_frame) throw NotFrameError("reconstruct: family is not a frame");
  if (check.bounds.lower <= 0.0 || check.bounds.upper / check.bounds.lower > 1e12)
    throw SingularFrameOperator("reconstruct: frame operator too ill-conditioned");

  // S^{-1} = J S_J^{-1} since S = S_J J
  auto eig = hermitian_eig(hilbert_frame_operator(f));
  Matrix sj_inv(f.space.dim(), f.space.dim());
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    const double w = 1.0 / eig.values[k];
    for (std::size_t i = 0; i < sj_inv.rows(); ++i)
      for (std::size_t j = 0; j < sj_inv.cols(); ++j)
        sj_inv(i, j) += w * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
  }
  const Vector y = f.space.apply_symmetry(sj_inv.apply(x));
  const Vector c = standard_space(f.k()).apply_symmetry(analyze(f, y));
  return synthesize(f, c);
}

VectorFamily symmetry_image(const VectorFamily& f) {
  return VectorFamily{f.space, f.space.apply_symmetry(f.synthesis)};
}

}  // namespace kframe
