#ifndef KFRAME_DILATION_HPP
#define KFRAME_DILATION_HPP

#include <cstddef>
#include <vector>

#include "kframe/frame.hpp"
#include "kframe/matrix.hpp"
#include "kframe/space.hpp"

namespace kframe {

struct SimilarityResult {
  bool similar = false;
  Matrix intertwiner;  // U with U x_n = y_n, present iff similar
  std::size_t range_dim_f = 0;
  std::size_t range_dim_g = 0;
};

struct Dilation {
  PontryaginSpace big_space;
  VectorFamily big_frame;
  Matrix projector;                    // J-orthogonal projection onto embedded H
  std::vector<std::size_t> embedding;  // original coordinate -> big-space coordinate
};

/// Column space of the analysis matrix, as a subspace of standard_space(k).
Subspace analysis_range(const VectorFamily& f);

/// Frames are similar iff their analysis operators share their range; the
/// intertwiner is recovered from the pre-frame operators via a pseudo-inverse.
SimilarityResult are_similar(const VectorFamily& f, const VectorFamily& g);

/// Dilates a frame to a k-dimensional space where it becomes the J-orthogonal
/// projection of a frame u_n = x_n (+) (I-Q)e_n. Throws DegenerateSubspace
/// when the analysis range is degenerate in standard_space(k).
Dilation dilate(const VectorFamily& f);

}  // namespace kframe

#endif
