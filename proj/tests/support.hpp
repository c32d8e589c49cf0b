#ifndef KFRAME_TESTS_SUPPORT_HPP
#define KFRAME_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "kframe/frame.hpp"
#include "kframe/matrix.hpp"
#include "kframe/space.hpp"

namespace kframe::testing {

using Rng = std::mt19937_64;

inline complex random_unit(Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return complex(u(rng), u(rng));
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_unit(rng);
  return m;
}

inline Vector random_vector(Rng& rng, std::size_t n) {
  Vector v(n);
  for (auto& z : v) z = random_unit(rng);
  return v;
}

inline Matrix random_hermitian(Rng& rng, std::size_t n) {
  const Matrix a = random_matrix(rng, n, n);
  Matrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return h;
}

inline Matrix random_positive_definite(Rng& rng, std::size_t n) {
  const Matrix a = random_matrix(rng, n, n);
  Matrix g = a * a.adjoint();
  for (std::size_t i = 0; i < n; ++i) g(i, i) += 0.5;
  return g;
}

inline PontryaginSpace random_space(Rng& rng, std::size_t dim) {
  std::bernoulli_distribution flip(0.5);
  std::vector<int> sig(dim);
  for (auto& s : sig) s = flip(rng) ? 1 : -1;
  return PontryaginSpace(std::move(sig));
}

/// Random full-rank family: a frame with probability 1; retries otherwise.
inline VectorFamily random_frame(Rng& rng, std::size_t dim, std::size_t k) {
  for (;;) {
    VectorFamily f{random_space(rng, dim), random_matrix(rng, dim, k)};
    if (validate(f).is_frame) return f;
  }
}

inline double frob_diff(const Matrix& a, const Matrix& b) { return (a - b).frobenius_norm(); }

}  // namespace kframe::testing

#endif
