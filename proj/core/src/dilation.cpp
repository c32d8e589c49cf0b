#include "kframe/dilation.hpp"

#include <cmath>
#include <numeric>

#include "kframe/errors.hpp"
#include "kframe/linalg.hpp"

namespace kframe {

Subspace analysis_range(const VectorFamily& f) {
  return make_subspace(standard_space(f.k()), analysis_matrix(f));
}

SimilarityResult are_similar(const VectorFamily& f, const VectorFamily& g) {
  if (f.k() != g.k()) throw KMismatch("are_similar: families have different index counts");
  if (!validate(f).is_frame || !validate(g).is_frame)
    throw NotFrameError("are_similar: both families must be frames");

  SimilarityResult res;
  const Subspace rf = analysis_range(f);
  const Subspace rg = analysis_range(g);
  res.range_dim_f = rf.dim();
  res.range_dim_g = rg.dim();
  if (rf.dim() != rg.dim()) return res;

  const Matrix pf = rf.basis * rf.basis.adjoint();
  const Matrix pg = rg.basis * rg.basis.adjoint();
  if ((pf - pg).frobenius_norm() >= 1e-10) return res;

  // U = T_G (T_F^[*] T_F)^+ T_F^[*]; the pseudo-inverse acts on the shared range
  res.similar = true;
  const Matrix af = analysis_matrix(f);
  res.intertwiner = g.synthesis * pseudo_inverse(af * f.synthesis) * af;
  return res;
}

Dilation dilate(const VectorFamily& f) {
  if (!validate(f).is_frame) throw NotFrameError("dilate: family is not a frame");
  const std::size_t d = f.space.dim();
  const std::size_t k = f.k();

  if (k == d) {  // analysis range is all of C^k, nothing to append
    Dilation out;
    out.big_space = f.space;
    out.big_frame = f;
    out.projector = Matrix::identity(d);
    out.embedding.resize(d);
    std::iota(out.embedding.begin(), out.embedding.end(), std::size_t{0});
    return out;
  }

  const PontryaginSpace ck = standard_space(k);
  const Subspace range = analysis_range(f);
  const Matrix q = j_orthogonal_projection(range);  // throws DegenerateSubspace
  const Subspace v = j_orthogonal_complement(range);

  // diagonalize the restricted indefinite Gram to put V in diagonal-J form
  const Matrix gram = v.basis.adjoint() * ck.apply_symmetry(v.basis);
  auto geig = hermitian_eig(gram);
  std::vector<int> vsig(v.dim());
  Matrix embed_v = v.basis * geig.vectors;  // columns then scaled to unit |Gram|
  for (std::size_t j = 0; j < v.dim(); ++j) {
    const double gamma = geig.values[j];
    if (std::abs(gamma) < 1e-10)
      throw DegenerateSubspace("dilate: complement of the analysis range is degenerate");
    vsig[j] = gamma > 0.0 ? 1 : -1;
    const double inv_root = 1.0 / std::sqrt(std::abs(gamma));
    for (std::size_t i = 0; i < k; ++i) embed_v(i, j) *= inv_root;
  }
  const PontryaginSpace vspace(vsig);
  const ProductSpace big = product_space(f.space, vspace);

  // left inverse of the embedding: coords = diag(sig) C^H Jt w
  const Matrix coord_map = vspace.fundamental_symmetry() * embed_v.adjoint() *
                           ck.fundamental_symmetry();
  const Matrix residual_proj = Matrix::identity(k) - q;

  Matrix synthesis(big.space.dim(), k);
  for (std::size_t n = 0; n < k; ++n) {
    Vector e(k, complex(0.0));
    e[n] = 1.0;
    const Vector z = coord_map.apply(residual_proj.apply(e));
    const Vector xn = f.vector(n);
    for (std::size_t i = 0; i < d; ++i) synthesis(i, n) = xn[i];
    for (std::size_t i = 0; i < v.dim(); ++i) synthesis(d + i, n) = z[i];
  }

  Dilation out;
  out.big_space = big.space;
  out.big_frame = make_family(big.space, synthesis);
  out.projector = block_diag(Matrix::identity(d), Matrix(v.dim(), v.dim()));
  out.embedding.resize(d);
  std::iota(out.embedding.begin(), out.embedding.end(), std::size_t{0});
  return out;
}

}  // namespace kframe
