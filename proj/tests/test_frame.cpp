#include <doctest.h>

#include <cmath>

#include "kframe/errors.hpp"
#include "kframe/frame.hpp"
#include "kframe/linalg.hpp"
#include "support.hpp"

using namespace kframe;
using namespace kframe::testing;

namespace {

VectorFamily standard_basis_family(const PontryaginSpace& sp) {
  return make_family(sp, Matrix::identity(sp.dim()));
}

}  // namespace

TEST_CASE("synthesize selects columns and is linear") {
  Rng rng(31);
  const VectorFamily f = random_frame(rng, 3, 5);
  Vector e(5, complex(0.0));
  e[2] = 1.0;
  CHECK(norm2(synthesize(f, e) - f.vector(2)) < 1e-15);
  CHECK(norm2(synthesize(f, Vector(5, complex(0.0)))) == 0.0);

  const Vector alpha = random_vector(rng, 5);
  Vector direct(3, complex(0.0));
  for (std::size_t n = 0; n < 5; ++n) direct = direct + scale(alpha[n], f.vector(n));
  CHECK(norm2(synthesize(f, alpha) - direct) < 1e-13);
}

TEST_CASE("analyze on the standard basis of standard_space(2)") {
  const VectorFamily f = standard_basis_family(standard_space(2));
  const Vector r = analyze(f, {0.0, 1.0});
  CHECK(std::abs(r[0]) < 1e-15);
  CHECK(std::abs(r[1] - complex(1.0)) < 1e-15);  // Jt flips the -1 from [e2,e2]
  CHECK(norm2(analyze(f, {0.0, 0.0})) == 0.0);
}

TEST_CASE("analyze agrees with its matrix form") {
  Rng rng(32);
  const VectorFamily f = random_frame(rng, 4, 6);
  const Matrix am = analysis_matrix(f);
  const Vector x = random_vector(rng, 4);
  CHECK(norm2(analyze(f, x) - am.apply(x)) < 1e-13);
}

TEST_CASE("frame operator of the standard basis of standard_space(2) is J") {
  const auto s2 = standard_space(2);
  const VectorFamily f = standard_basis_family(s2);
  CHECK(frob_diff(frame_operator(f), s2.fundamental_symmetry()) < 1e-14);
}

TEST_CASE("Parseval case: orthonormal basis of a Hilbert space") {
  const VectorFamily f = standard_basis_family(hilbert_space(3));
  CHECK(frob_diff(frame_operator(f), Matrix::identity(3)) < 1e-14);
  CHECK(frob_diff(hilbert_frame_operator(f), Matrix::identity(3)) < 1e-14);
}

TEST_CASE("frame operator equals the rank-1 accumulation of Sx = sum [x_n,x] x_n") {
  Rng rng(33);
  const VectorFamily f = random_frame(rng, 3, 5);
  const Matrix s = frame_operator(f);
  for (int rep = 0; rep < 10; ++rep) {
    const Vector x = random_vector(rng, 3);
    Vector acc(3, complex(0.0));
    for (std::size_t n = 0; n < f.k(); ++n)
      acc = acc + scale(indefinite_inner(f.space, x, f.vector(n)), f.vector(n));
    CHECK(norm2(s.apply(x) - acc) < 1e-12);
  }
}

TEST_CASE("hilbert frame operator of a duplicated basis vector") {
  const VectorFamily f =
      make_family(hilbert_space(1), Matrix::from_columns({{1.0}, {1.0}}));
  CHECK(std::abs(hilbert_frame_operator(f)(0, 0) - complex(2.0)) < 1e-15);
}

TEST_CASE("frame_operator = hilbert_frame_operator * J") {
  Rng rng(34);
  const VectorFamily f = random_frame(rng, 4, 7);
  const Matrix lhs = frame_operator(f);
  const Matrix rhs = hilbert_frame_operator(f) * f.space.fundamental_symmetry();
  CHECK(frob_diff(lhs, rhs) < 1e-13 * std::max(1.0, lhs.frobenius_norm()));
}

TEST_CASE("frame operator is self-adjoint for the indefinite product") {
  Rng rng(35);
  const VectorFamily f = random_frame(rng, 4, 6);
  const Matrix s = frame_operator(f);
  for (int rep = 0; rep < 10; ++rep) {
    const Vector x = random_vector(rng, 4), y = random_vector(rng, 4);
    CHECK(std::abs(indefinite_inner(f.space, s.apply(x), y) -
                   indefinite_inner(f.space, x, s.apply(y))) < 1e-12);
  }
}

TEST_CASE("validate on the standard basis") {
  const auto res = validate(standard_basis_family(standard_space(4)));
  REQUIRE(res.is_frame);
  CHECK(res.bounds.lower == doctest::Approx(1.0));
  CHECK(res.bounds.upper == doctest::Approx(1.0));
  CHECK(res.bounds.tight);
  CHECK(res.bounds.exact);
}

TEST_CASE("redundant frame is not exact") {
  const Matrix x = Matrix::from_columns({{1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
  const auto res = validate(make_family(hilbert_space(2), x));
  REQUIRE(res.is_frame);
  CHECK_FALSE(res.bounds.exact);
}

TEST_CASE("deficient family is not a frame") {
  const auto res = validate(make_family(standard_space(2), Matrix::from_columns({{1.0, 0.0}})));
  CHECK_FALSE(res.is_frame);
  CHECK(res.rank == 1);
}

TEST_CASE("exactness iff k equals dim with invertible synthesis") {
  Rng rng(36);
  for (int rep = 0; rep < 10; ++rep) {
    const std::size_t dim = 2 + rep % 3;
    const std::size_t k = dim + rep % 2;
    const VectorFamily f = random_frame(rng, dim, k);
    const auto res = validate(f);
    CHECK(res.bounds.exact == (k == dim));
  }
}

TEST_CASE("four formulations agree on the standard basis") {
  const auto all = four_formulations_bounds(standard_basis_family(standard_space(3)));
  for (const auto& b : all) {
    CHECK(b.lower == doctest::Approx(1.0));
    CHECK(b.upper == doctest::Approx(1.0));
  }
}

TEST_CASE("four formulations on synthesis diag(2,1)") {
  const VectorFamily f = make_family(standard_space(2), Matrix::diagonal({2.0, 1.0}));
  const auto all = four_formulations_bounds(f);
  for (const auto& b : all) {
    CHECK(b.lower == doctest::Approx(1.0));
    CHECK(b.upper == doctest::Approx(4.0));
  }
}

TEST_CASE("four formulations coincide on random frames") {
  Rng rng(37);
  for (int rep = 0; rep < 10; ++rep) {
    const VectorFamily f = random_frame(rng, 3, 6);
    const auto all = four_formulations_bounds(f);
    for (int i = 1; i < 4; ++i) {
      CHECK(std::abs(all[i].lower - all[0].lower) < 1e-10 * all[0].upper);
      CHECK(std::abs(all[i].upper - all[0].upper) < 1e-10 * all[0].upper);
    }
  }
}

TEST_CASE("validate(F) and validate(JF) share optimal bounds") {
  Rng rng(38);
  const VectorFamily f = random_frame(rng, 4, 6);
  const auto a = validate(f), b = validate(symmetry_image(f));
  REQUIRE(a.is_frame);
  REQUIRE(b.is_frame);
  CHECK(std::abs(a.bounds.lower - b.bounds.lower) < 1e-10 * a.bounds.upper);
  CHECK(std::abs(a.bounds.upper - b.bounds.upper) < 1e-10 * a.bounds.upper);
}

TEST_CASE("sandwich inequality with optimal bounds") {
  Rng rng(39);
  const VectorFamily f = random_frame(rng, 3, 6);
  const auto res = validate(f);
  REQUIRE(res.is_frame);
  for (int rep = 0; rep < 100; ++rep) {
    const Vector x = random_vector(rng, 3);
    double energy = 0.0;
    for (std::size_t n = 0; n < f.k(); ++n)
      energy += std::norm(indefinite_inner(f.space, f.vector(n), x));
    const double nx2 = j_norm(f.space, x) * j_norm(f.space, x);
    CHECK(energy >= res.bounds.lower * nx2 - 1e-9 * res.bounds.upper * nx2);
    CHECK(energy <= res.bounds.upper * nx2 + 1e-9 * res.bounds.upper * nx2);
  }
}

TEST_CASE("adjoint pairing between synthesis and analysis") {
  Rng rng(40);
  const VectorFamily f = random_frame(rng, 4, 6);
  const auto ck = standard_space(6);
  for (int rep = 0; rep < 10; ++rep) {
    const Vector alpha = random_vector(rng, 6);
    const Vector x = random_vector(rng, 4);
    const complex lhs = indefinite_inner(f.space, synthesize(f, alpha), x);
    const complex rhs = indefinite_inner(ck, alpha, analyze(f, x));
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("reconstruction is the identity on frames") {
  Rng rng(41);
  const VectorFamily basis = standard_basis_family(standard_space(3));
  const Vector x = random_vector(rng, 3);
  CHECK(norm2(reconstruct(basis, x) - x) < 1e-12);
  CHECK(norm2(reconstruct(basis, Vector(3, complex(0.0)))) < 1e-15);

  for (int rep = 0; rep < 10; ++rep) {
    const VectorFamily f = random_frame(rng, 4, 7);
    const Vector y = random_vector(rng, 4);
    CHECK(norm2(reconstruct(f, y) - y) < 1e-10 * std::max(1.0, norm2(y)));
  }
}

TEST_CASE("reconstruct and four_formulations reject non-frames") {
  const VectorFamily thin =
      make_family(standard_space(2), Matrix::from_columns({{1.0, 0.0}}));
  CHECK_THROWS_AS(reconstruct(thin, Vector{1.0, 0.0}), NotFrameError);
  CHECK_THROWS_AS(four_formulations_bounds(thin), NotFrameError);
}

TEST_CASE("zero vectors are allowed inside families") {
  Matrix x(2, 3);
  x(0, 0) = 1.0;
  x(1, 1) = 1.0;  // third column all zero
  const auto res = validate(make_family(hilbert_space(2), x));
  CHECK(res.is_frame);
}
