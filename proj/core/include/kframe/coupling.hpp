#ifndef KFRAME_COUPLING_HPP
#define KFRAME_COUPLING_HPP

#include "kframe/construction.hpp"
#include "kframe/dilation.hpp"
#include "kframe/frame.hpp"
#include "kframe/matrix.hpp"
#include "kframe/space.hpp"

namespace kframe {

struct Coupling {
  ProductSpace big_space;   // product of the two dilated spaces
  VectorFamily coupled_frame;
  Matrix projector_k;       // recovers the first factor's vectors
  Matrix projector_h;       // recovers the second factor's vectors
  Dilation dilation_k;
  Dilation dilation_h;
};

/// Couples two frames into one frame on a product space; families of unequal
/// length are zero-padded to a common k.
Coupling couple_frames(const VectorFamily& f, const VectorFamily& g);

/// Block-diagonal coupler of two Hermitian positive definite operators.
Matrix couple_operators(const PontryaginSpace& k, const Matrix& s_k,
                        const PontryaginSpace& h, const Matrix& s_h);

/// Frame on the product space whose Hilbert frame operator is the coupler.
VectorFamily coupled_operator_frame(const PontryaginSpace& k, const Matrix& s_k,
                                    const PontryaginSpace& h, const Matrix& s_h,
                                    const NormSpec& norms,
                                    FrameFlavor flavor = FrameFlavor::HilbertFrame);

}  // namespace kframe

#endif
