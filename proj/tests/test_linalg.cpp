#include <gtest/gtest.h>

#include <random>

#include "glat/linalg.hpp"
#include "oracles.hpp"

using namespace glat;

namespace {

errc code_of(auto&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return errc::parse_error;
}

Vector codes(const RingPtr& K, std::initializer_list<std::int64_t> c) {
  Vector v;
  for (auto x : c) v.push_back(Scalar::from_code(K, x));
  return v;
}

}  // namespace

TEST(Matrix, InverseOverRationals) {
  auto Q = DivisionRing::rationals();
  auto A = Matrix::from_ints(Q, {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  EXPECT_EQ(A * inverse(A), Matrix::identity(Q, 3));
  EXPECT_EQ(rank(Matrix::from_ints(Q, {{1, 2}, {2, 4}})), 1u);
  EXPECT_EQ(code_of([&] { inverse(Matrix::from_ints(Q, {{1, 2}, {2, 4}})); }), errc::not_invertible);
}

TEST(Matrix, RrefPivots) {
  auto F = DivisionRing::gf(3);
  std::vector<std::size_t> piv;
  auto R = rref(Matrix::from_ints(F, {{0, 1, 2}, {0, 2, 1}, {1, 1, 1}}), &piv);
  EXPECT_EQ(R.rows(), 2u);
  EXPECT_EQ(piv, (std::vector<std::size_t>{0, 1}));
}

TEST(VectorSpace, RejectsQuaternionsAndZeroDimension) {
  EXPECT_EQ(code_of([] { VectorSpace(DivisionRing::quaternions(), 2); }), errc::non_commutative_carrier);
  EXPECT_EQ(code_of([] { VectorSpace(DivisionRing::gf(2), 0); }), errc::dimension_mismatch);
}

TEST(Semilinear, ShiftOverRationals) {
  auto Q = DivisionRing::rationals();
  VectorSpace V(Q, 3);
  SemilinearMap f(V, Matrix::from_ints(Q, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(f(make_vector(Q, {1, 2, 3})), make_vector(Q, {3, 1, 2}));
}

TEST(Semilinear, FrobeniusComponentwise) {
  auto F = DivisionRing::gf(2, 2);
  VectorSpace V(F, 3);
  SemilinearMap f(V, Matrix::identity(F, 3), RingAutomorphism::frobenius(F, 1));
  EXPECT_EQ(f(codes(F, {2, 1, 0})), codes(F, {3, 1, 0}));
  for (int w = 0; w < 4; ++w) EXPECT_EQ(f(codes(F, {w, 0, 0}))[0].code(), oracle::gf4_frob(w));
}

TEST(Semilinear, TwistLawExhaustiveGf4Squared) {
  auto F = DivisionRing::gf(2, 2);
  VectorSpace V(F, 2);
  SemilinearMap f(V, Matrix::from_ints(F, {{1, 1}, {0, 1}}), RingAutomorphism::frobenius(F, 1));
  f = f.compose(SemilinearMap(V, Matrix::identity(F, 2).map_entries([&](const Scalar& s) { return s * Scalar::from_code(F, 2); })));
  for (const auto& a : elements(F))
    for (const auto& x : elements(F))
      for (const auto& y : elements(F)) {
        Vector v{x, y};
        EXPECT_EQ(f(scale(a, v)), scale(f.theta()(a), f(v)));
      }
}

TEST(Semilinear, CompositionAndInverse) {
  auto F = DivisionRing::gf(2, 3);
  VectorSpace V(F, 2);
  std::mt19937_64 rng(3);
  auto sgl = enumerate_sgl(V);
  for (int t = 0; t < 50; ++t) {
    const auto& f = sgl[rng() % sgl.size()];
    const auto& g = sgl[rng() % sgl.size()];
    Vector v{random_scalar(F, rng), random_scalar(F, rng)};
    EXPECT_EQ(f.compose(g)(v), f(g(v)));
    EXPECT_EQ(f.inverse()(f(v)), v);
    EXPECT_EQ(f.scaled(Scalar::from_code(F, 3))(v), scale(Scalar::from_code(F, 3), f(v)));
  }
}

TEST(Semilinear, SpaceMismatch) {
  auto F = DivisionRing::gf(3);
  auto f = SemilinearMap::identity(VectorSpace(F, 2));
  auto g = SemilinearMap::identity(VectorSpace(F, 3));
  EXPECT_EQ(code_of([&] { f.compose(g); }), errc::space_mismatch);
}

TEST(Subspace, SumAndIntersection) {
  auto F = DivisionRing::gf(2);
  VectorSpace V(F, 3);
  auto a = Subspace::span(V, {make_vector(F, {1, 0, 0}), make_vector(F, {0, 1, 0})});
  auto b = Subspace::span(V, {make_vector(F, {0, 1, 0}), make_vector(F, {0, 0, 1})});
  EXPECT_EQ(subspace_sum(a, b).rank(), 3u);
  auto c = subspace_intersection(a, b);
  EXPECT_EQ(c.rank(), 1u);
  EXPECT_TRUE(c.contains(make_vector(F, {0, 1, 0})));
}

TEST(Subspace, ShiftImageOfLine) {
  auto F = DivisionRing::gf(2);
  VectorSpace V(F, 3);
  SemilinearMap f(V, Matrix::from_ints(F, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  auto W = Subspace::span(V, {make_vector(F, {1, 1, 0})});
  EXPECT_EQ(map_subspace(f, W), Subspace::span(V, {make_vector(F, {0, 1, 1})}));
}

TEST(Enumeration, SubspaceCountsMatchGaussianBinomials) {
  for (auto [p, k, n] : {std::tuple{2, 1, 3}, std::tuple{3, 1, 3}, std::tuple{2, 1, 4}, std::tuple{2, 2, 3}, std::tuple{5, 1, 2}, std::tuple{7, 1, 2}}) {
    auto S = enumerate_subspaces(VectorSpace(DivisionRing::gf(p, k), n));
    EXPECT_EQ(static_cast<std::int64_t>(S.subspaces.size()), oracle::subspace_count(oracle::ipow(p, k), n)) << p << "^" << k << " n=" << n;
    std::vector<std::int64_t> by_rank(n + 1, 0);
    for (const auto& W : S.subspaces) ++by_rank[W.rank()];
    for (int r = 0; r <= n; ++r) EXPECT_EQ(by_rank[r], oracle::gaussian_binomial(oracle::ipow(p, k), n, r));
  }
}

TEST(Enumeration, FrozenCounts) {
  EXPECT_EQ(enumerate_subspaces(VectorSpace(DivisionRing::gf(2), 3)).subspaces.size(), 16u);
  EXPECT_EQ(enumerate_subspaces(VectorSpace(DivisionRing::gf(3), 3)).subspaces.size(), 28u);
}

TEST(Enumeration, LatticeMeetIsIntersection) {
  auto S = enumerate_subspaces(VectorSpace(DivisionRing::gf(3), 2));
  for (std::size_t i = 0; i < S.subspaces.size(); ++i)
    for (std::size_t j = 0; j < S.subspaces.size(); ++j) {
      EXPECT_EQ(S.subspaces[S.lattice.meet(i, j)], subspace_intersection(S.subspaces[i], S.subspaces[j]));
      EXPECT_EQ(S.subspaces[S.lattice.join(i, j)], subspace_sum(S.subspaces[i], S.subspaces[j]));
    }
}

TEST(Enumeration, Errors) {
  EXPECT_EQ(code_of([] { enumerate_subspaces(VectorSpace(DivisionRing::rationals(), 2)); }), errc::infinite_carrier);
  EXPECT_EQ(code_of([] { enumerate_subspaces(VectorSpace(DivisionRing::gf(3), 8)); }), errc::too_large);
}

TEST(Sgl, CountsMatchOracle) {
  EXPECT_EQ(static_cast<std::int64_t>(enumerate_sgl(VectorSpace(DivisionRing::gf(2), 2)).size()), oracle::gl_order(2, 2));
  EXPECT_EQ(static_cast<std::int64_t>(enumerate_sgl(VectorSpace(DivisionRing::gf(2), 3)).size()), oracle::gl_order(2, 3));
  EXPECT_EQ(enumerate_sgl(VectorSpace(DivisionRing::gf(2, 2), 1)).size(), 6u);
  EXPECT_EQ(general_linear_order(4, 3) * 2, 362880);
  EXPECT_EQ(general_linear_order(3, 3), oracle::gl_order(3, 3));
}

TEST(Sgl, EnumerationIsDistinctAndInvertible) {
  auto all = enumerate_sgl(VectorSpace(DivisionRing::gf(3), 2));
  EXPECT_EQ(static_cast<std::int64_t>(all.size()), oracle::gl_order(3, 2));
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_TRUE(all[i].is_invertible());
    if (i) {
      EXPECT_FALSE(all[i] == all[i - 1]);
    }
  }
}
