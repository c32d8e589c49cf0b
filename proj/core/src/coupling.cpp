#include "kframe/coupling.hpp"

#include <algorithm>

#include "kframe/errors.hpp"
#include "kframe/linalg.hpp"

namespace kframe {

namespace {

VectorFamily pad_with_zeros(const VectorFamily& f, std::size_t k) {
  if (f.k() == k) return f;
  Matrix x(f.space.dim(), k);
  for (std::size_t j = 0; j < f.k(); ++j)
    for (std::size_t i = 0; i < f.space.dim(); ++i) x(i, j) = f.synthesis(i, j);
  return VectorFamily{f.space, x};
}

void require_positive_hermitian(const Matrix& s, const char* what) {
  auto eig = hermitian_eig(s);  // NotHermitian on failure
  if (!eig.values.empty() &&
      (eig.values.back() <= 0.0 ||
       eig.values.back() <= 1e-12 * std::max(eig.values.front(), 0.0)))
    throw NotPositiveDefinite(std::string(what) + ": operator is not positive definite");
}

}  // namespace

Coupling couple_frames(const VectorFamily& f, const VectorFamily& g) {
  if (!validate(f).is_frame || !validate(g).is_frame)
    throw NotFrameError("couple_frames: both families must be frames");
  const std::size_t k = std::max(f.k(), g.k());
  const VectorFamily fp = pad_with_zeros(f, k);
  const VectorFamily gp = pad_with_zeros(g, k);

  Coupling out;
  out.dilation_k = dilate(fp);
  out.dilation_h = dilate(gp);
  out.big_space = product_space(out.dilation_k.big_space, out.dilation_h.big_space);

  Matrix synthesis(out.big_space.space.dim(), k);
  const std::size_t dk = out.dilation_k.big_space.dim();
  for (std::size_t n = 0; n < k; ++n) {
    for (std::size_t i = 0; i < dk; ++i)
      synthesis(i, n) = out.dilation_k.big_frame.synthesis(i, n);
    for (std::size_t i = 0; i < out.dilation_h.big_space.dim(); ++i)
      synthesis(dk + i, n) = out.dilation_h.big_frame.synthesis(i, n);
  }
  out.coupled_frame = make_family(out.big_space.space, synthesis);

  const std::size_t dh = out.dilation_h.big_space.dim();
  out.projector_k = block_diag(out.dilation_k.projector, Matrix(dh, dh));
  out.projector_h = block_diag(Matrix(dk, dk), out.dilation_h.projector);
  return out;
}

Matrix couple_operators(const PontryaginSpace& k, const Matrix& s_k,
                        const PontryaginSpace& h, const Matrix& s_h) {
  if (s_k.rows() != k.dim() || s_k.cols() != k.dim() || s_h.rows() != h.dim() ||
      s_h.cols() != h.dim())
    throw DimensionMismatch("couple_operators: operator shapes do not match the spaces");
  require_positive_hermitian(s_k, "couple_operators");
  require_positive_hermitian(s_h, "couple_operators");
  return block_diag(s_k, s_h);
}

VectorFamily coupled_operator_frame(const PontryaginSpace& k, const Matrix& s_k,
                                    const PontryaginSpace& h, const Matrix& s_h,
                                    const NormSpec& norms, FrameFlavor flavor) {
  const Matrix coupled = couple_operators(k, s_k, h, s_h);
  const ProductSpace big = product_space(k, h);
  return construct_frame(big.space, coupled, norms, flavor);
}

}  // namespace kframe
