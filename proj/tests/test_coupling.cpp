#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "kframe/coupling.hpp"
#include "kframe/errors.hpp"
#include "kframe/linalg.hpp"
#include "support.hpp"

using namespace kframe;
using namespace kframe::testing;

TEST_CASE("coupling two bases is the direct product") {
  const VectorFamily f = make_family(standard_space(2), Matrix::identity(2));
  const VectorFamily g = make_family(standard_space(2), Matrix::identity(2));
  const Coupling c = couple_frames(f, g);
  CHECK(c.big_space.space.dim() == 4);
  for (std::size_t n = 0; n < 2; ++n) {
    const Vector z = c.coupled_frame.vector(n);
    const Vector pk = c.projector_k.apply(z);
    const Vector ph = c.projector_h.apply(z);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(std::abs(pk[i] - f.synthesis(i, n)) < 1e-14);
      CHECK(std::abs(ph[2 + i] - g.synthesis(i, n)) < 1e-14);
    }
  }
}

TEST_CASE("coupling a redundant frame with a basis frame") {
  const Matrix x = Matrix::from_columns({{1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
  const VectorFamily f = make_family(hilbert_space(2), x);
  const VectorFamily g = make_family(hilbert_space(3), Matrix::identity(3));
  const Coupling c = couple_frames(f, g);
  CHECK(c.big_space.space.dim() == 6);
  // the coupled family is linearly independent, a frame for its span
  CHECK(rank(c.coupled_frame.synthesis) == 3);
  const std::size_t dk = c.dilation_k.big_space.dim();
  for (std::size_t n = 0; n < 3; ++n) {
    const Vector z = c.coupled_frame.vector(n);
    const Vector pk = c.projector_k.apply(z);
    const Vector ph = c.projector_h.apply(z);
    for (std::size_t i = 0; i < 2; ++i) CHECK(std::abs(pk[i] - x(i, n)) < 1e-12);
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(std::abs(ph[dk + i] - g.synthesis(i, n)) < 1e-12);
  }
}

TEST_CASE("unequal index counts are zero-padded") {
  const VectorFamily f = make_family(hilbert_space(2), Matrix::identity(2));  // k = 2
  const VectorFamily g = make_family(hilbert_space(3), Matrix::identity(3));  // k = 3
  const Coupling c = couple_frames(f, g);
  CHECK(c.coupled_frame.k() == 3);
  const Vector pk3 = c.projector_k.apply(c.coupled_frame.vector(2));
  CHECK(norm2(pk3) < 1e-12);
}

TEST_CASE("coupling projector algebra") {
  Rng rng(71);
  const VectorFamily f = random_frame(rng, 2, 4);
  const VectorFamily g = random_frame(rng, 3, 4);
  Coupling c;
  try {
    c = couple_frames(f, g);
  } catch (const DegenerateSubspace&) {
    return;
  }
  const auto& sp = c.big_space.space;
  CHECK(frob_diff(c.projector_k * c.projector_k, c.projector_k) < 1e-12);
  CHECK(frob_diff(c.projector_h * c.projector_h, c.projector_h) < 1e-12);
  CHECK(frob_diff(j_adjoint(sp, sp, c.projector_k), c.projector_k) < 1e-12);
  CHECK(frob_diff(j_adjoint(sp, sp, c.projector_h), c.projector_h) < 1e-12);
  CHECK((c.projector_k * c.projector_h).frobenius_norm() < 1e-14);
  CHECK((c.projector_h * c.projector_k).frobenius_norm() < 1e-14);
  // P_K + P_H projects J-orthogonally onto the embedded K x H
  const Matrix sum = c.projector_k + c.projector_h;
  CHECK(frob_diff(sum * sum, sum) < 1e-12);
  CHECK(frob_diff(j_adjoint(sp, sp, sum), sum) < 1e-12);
}

TEST_CASE("pre-frame norms split over the factors") {
  Rng rng(72);
  const VectorFamily f = random_frame(rng, 2, 4);
  const VectorFamily g = random_frame(rng, 3, 4);
  Coupling c;
  try {
    c = couple_frames(f, g);
  } catch (const DegenerateSubspace&) {
    return;
  }
  for (int rep = 0; rep < 20; ++rep) {
    const Vector coeff = random_vector(rng, 4);
    const Vector whole = synthesize(c.coupled_frame, coeff);
    const Vector left = synthesize(c.dilation_k.big_frame, coeff);
    const Vector right = synthesize(c.dilation_h.big_frame, coeff);
    const double lhs = norm2(whole) * norm2(whole);
    const double rhs = norm2(left) * norm2(left) + norm2(right) * norm2(right);
    CHECK(std::abs(lhs - rhs) < 1e-13 * std::max(1.0, lhs));
  }
}

TEST_CASE("couple_operators basics") {
  const auto k2 = standard_space(2), h3 = standard_space(3);
  CHECK(frob_diff(couple_operators(k2, Matrix::identity(2), h3, Matrix::identity(3)),
                  Matrix::identity(5)) == 0.0);
  const Matrix s = couple_operators(k2, Matrix::diagonal({2.0, 1.0}),
                                    standard_space(1), Matrix::diagonal({3.0}));
  CHECK(frob_diff(s, Matrix::diagonal({2.0, 1.0, 3.0})) == 0.0);
}

TEST_CASE("coupled spectrum is the multiset union") {
  Rng rng(73);
  const Matrix sk = random_positive_definite(rng, 3);
  const Matrix sh = random_positive_definite(rng, 4);
  const Matrix s = couple_operators(hilbert_space(3), sk, hilbert_space(4), sh);
  auto es = hermitian_eig(s).values;
  auto ek = hermitian_eig(sk).values;
  auto eh = hermitian_eig(sh).values;
  std::vector<double> merged;
  merged.insert(merged.end(), ek.begin(), ek.end());
  merged.insert(merged.end(), eh.begin(), eh.end());
  std::sort(merged.begin(), merged.end(), std::greater<double>());
  REQUIRE(es.size() == merged.size());
  for (std::size_t i = 0; i < es.size(); ++i) CHECK(std::abs(es[i] - merged[i]) < 1e-11);
}

TEST_CASE("couple_operators rejects bad input") {
  const auto s2 = standard_space(2);
  Matrix notherm(2, 2);
  notherm(0, 1) = 1.0;
  CHECK_THROWS_AS(couple_operators(s2, notherm, s2, Matrix::identity(2)), NotHermitian);
  CHECK_THROWS_AS(
      couple_operators(s2, Matrix::diagonal({1.0, -1.0}), s2, Matrix::identity(2)),
      NotPositiveDefinite);
}

TEST_CASE("coupled_operator_frame on identity blocks") {
  const auto h1 = hilbert_space(1);
  const VectorFamily f = coupled_operator_frame(h1, Matrix::identity(1), h1,
                                                Matrix::identity(1), make_norms({1.0, 1.0}));
  CHECK(f.k() == 2);
  CHECK(frob_diff(hilbert_frame_operator(f), Matrix::identity(2)) < 1e-10);
}

TEST_CASE("coupled_operator_frame matches the construction path") {
  const auto h1 = hilbert_space(1);
  const NormSpec norms = make_norms({1.0, 1.0, 1.0});
  const VectorFamily f = coupled_operator_frame(h1, Matrix::diagonal({2.0}), h1,
                                                Matrix::diagonal({1.0}), norms);
  CHECK(frob_diff(hilbert_frame_operator(f), Matrix::diagonal({2.0, 1.0})) < 1e-9);
}

TEST_CASE("coupled_operator_frame propagates infeasibility") {
  const auto h1 = hilbert_space(1);
  CHECK_THROWS_AS(coupled_operator_frame(h1, Matrix::identity(1), h1, Matrix::identity(1),
                                         make_norms({2.0, 2.0})),
                  NotMajorized);
}
