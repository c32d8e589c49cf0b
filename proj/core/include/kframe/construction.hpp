#ifndef KFRAME_CONSTRUCTION_HPP
#define KFRAME_CONSTRUCTION_HPP

#include <vector>

#include "kframe/frame.hpp"
#include "kframe/matrix.hpp"
#include "kframe/space.hpp"

namespace kframe {

struct SpectrumSpec {
  std::vector<double> eigenvalues;  // sorted descending, all > 0
};
SpectrumSpec make_spectrum(std::vector<double> eigenvalues);

struct NormSpec {
  std::vector<double> norms;  // sorted descending, all > 0
};
NormSpec make_norms(std::vector<double> norms);

struct MajorizationReport {
  std::vector<bool> partial_ok;  // one per j = 1..N
  double trace_lhs = 0.0;        // sum a_n^2
  double trace_rhs = 0.0;        // sum lambda_n
  bool trace_balanced = false;
  bool totals_dominated = false;  // trace_lhs <= trace_rhs, the literal condition
  bool feasible = false;          // all partial_ok and trace_balanced
};

MajorizationReport check_majorization(const SpectrumSpec& spectrum, const NormSpec& norms);

/// Real symmetric matrix with prescribed spectrum mu (descending, zeros
/// allowed) and prescribed diagonal d, built by a Givens-rotation chain.
/// Requires d majorized by mu with equal totals; throws NotMajorized.
Matrix schur_horn_hermitian(const std::vector<double>& mu, const std::vector<double>& d);

enum class FrameFlavor { HilbertFrame, PontryaginFrame, JFamilyPontryagin, JFamilyHilbert };

/// Frame on `space` with prescribed operator and vector norms.
/// HilbertFrame: vectors x_n with X X^H = S0 and ||x_n||_J = a_n.
/// PontryaginFrame: same vectors, frame operator S0 J.
/// JFamilyPontryagin: vectors J x_n, frame operator J S0.
/// JFamilyHilbert: vectors J x_n, Hilbert frame operator J S0 J.
VectorFamily construct_frame(const PontryaginSpace& space, const Matrix& s0,
                             const NormSpec& norms, FrameFlavor flavor);

}  // namespace kframe

#endif
