#ifndef KFRAME_LINALG_HPP
#define KFRAME_LINALG_HPP

#include <vector>

#include "kframe/matrix.hpp"

namespace kframe {

inline constexpr double kTolHermitian = 1e-10;  // relative
inline constexpr double kTolEig = 1e-11;        // relative
inline constexpr double kRankTol = 1e-10;       // relative to sigma_max

struct EigResult {
  std::vector<double> values;  // sorted descending
  Matrix vectors;              // unitary, column n pairs with values[n]
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.
/// Throws NotHermitian when the input is not Hermitian within kTolHermitian,
/// NonFinite on invalid entries.
EigResult hermitian_eig(const Matrix& m);

std::size_t rank(const Matrix& m, double tol = kRankTol);

/// Moore-Penrose pseudo-inverse via the Hermitian eigendecomposition of M^H M.
Matrix pseudo_inverse(const Matrix& m, double tol = kRankTol);

/// Hilbert-orthonormal basis of the column space; column count equals rank.
Matrix column_space_basis(const Matrix& m, double tol = kRankTol);

}  // namespace kframe

#endif
