#include <gtest/gtest.h>

#include <random>

#include "glat/tgring.hpp"
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

TwistedRingPtr gf3_twisted() {
  auto K = DivisionRing::gf(3);
  auto fs = FactorSystem::trivial(FiniteGroup::cyclic(2), K);
  fs.bracket[1][1] = Scalar::from_int(K, 2);
  return TwistedGroupRing::make(fs);
}

TwistedRingPtr gf4_frobenius() {
  auto K = DivisionRing::gf(2, 2);
  auto fs = FactorSystem::trivial(FiniteGroup::cyclic(2), K);
  fs.chi[1] = RingAutomorphism::frobenius(K, 1);
  return TwistedGroupRing::make(fs);
}

// q as a signed unit, if it is one.
std::optional<oracle::SignedUnit> as_unit(const Quaternion& q) {
  for (int u = 0; u < 4; ++u) {
    bool rest = true;
    for (int t = 0; t < 4; ++t)
      if (t != u) rest = rest && q.c[t] == 0;
    if (!rest) continue;
    if (q.c[u] == 1) return oracle::SignedUnit{1, u};
    if (q.c[u] == -1) return oracle::SignedUnit{-1, u};
  }
  return std::nullopt;
}

}  // namespace

TEST(TwistedRing, ProductOverRationalsC3) {
  auto Q = DivisionRing::rationals();
  auto T = TwistedGroupRing::make(FactorSystem::trivial(FiniteGroup::cyclic(3), Q));
  auto u = TwistedRingElement::basis(T, 0) + TwistedRingElement::basis(T, 1, Scalar::from_int(Q, 2));
  auto v = TwistedRingElement::basis(T, 1, Scalar::from_int(Q, 3));
  auto w = u * v;
  EXPECT_EQ(w.coefficients(), (std::vector<Scalar>{Scalar::zero(Q), Scalar::from_int(Q, 3), Scalar::from_int(Q, 6)}));
  EXPECT_EQ(w.to_string(), "3*a + 6*a^2");
}

TEST(TwistedRing, TwistedSquare) {
  auto T = gf3_twisted();
  auto a = TwistedRingElement::basis(T, 1);
  EXPECT_EQ(a * a, TwistedRingElement::scalar(T, Scalar::from_int(T->ring(), 2)));
  EXPECT_EQ(a * a * a * a, TwistedRingElement::basis(T, 0));
}

TEST(TwistedRing, FrobeniusCommutation) {
  auto T = gf4_frobenius();
  auto K = T->ring();
  auto a = TwistedRingElement::basis(T, 1);
  for (int c = 0; c < 4; ++c) {
    auto s = TwistedRingElement::scalar(T, Scalar::from_code(K, c));
    EXPECT_EQ(a * s, Scalar::from_code(K, oracle::gf4_frob(c)) * a);
    EXPECT_EQ(s * a, Scalar::from_code(K, c) * a);
  }
}

TEST(TwistedRing, AssociativeAndDistributive) {
  std::mt19937_64 rng(11);
  for (auto T : {gf3_twisted(), gf4_frobenius(), TwistedGroupRing::make(FactorSystem::trivial(FiniteGroup::symmetric(3), DivisionRing::gf(5)))}) {
    auto K = T->ring();
    auto rnd = [&] {
      std::vector<Scalar> c;
      for (std::size_t g = 0; g < T->rank(); ++g) c.push_back(random_scalar(K, rng));
      return TwistedRingElement::from_coefficients(T, c);
    };
    for (int t = 0; t < 40; ++t) {
      auto x = rnd(), y = rnd(), z = rnd();
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ((x + y) * z, x * z + y * z);
    }
  }
}

TEST(TwistedRing, Errors) {
  auto T = gf3_twisted();
  auto U = gf3_twisted();
  EXPECT_EQ(code_of([&] { TwistedRingElement::basis(T, 0) * TwistedRingElement::basis(U, 0); }), errc::parent_mismatch);
  EXPECT_EQ(code_of([&] { TwistedRingElement::basis(T, 2); }), errc::shape_mismatch);
  EXPECT_EQ(code_of([&] { TwistedRingElement::from_coefficients(T, {Scalar::one(T->ring())}); }), errc::dimension_mismatch);
  auto bad = FactorSystem::trivial(FiniteGroup::cyclic(2), DivisionRing::gf(3));
  bad.bracket[0][0] = Scalar::from_int(bad.ring, 2);
  EXPECT_EQ(code_of([&] { TwistedGroupRing::make(bad); }), errc::invalid_factor_system);
}

TEST(Regular, TwistedGf3Matrix) {
  auto rho = regular_representation(*gf3_twisted());
  auto K = DivisionRing::gf(3);
  EXPECT_EQ(rho(1).matrix(), Matrix::from_ints(K, {{0, 2}, {1, 0}}));
  EXPECT_EQ(rho(1).compose(rho(1)).matrix(), Matrix::identity(K, 2).map_entries([&](const Scalar& s) { return s * Scalar::from_int(K, 2); }));
  EXPECT_EQ(factor_system_from_rep(rho), gf3_twisted()->factor_system());
}

TEST(Regular, MatchesLeftMultiplication) {
  for (auto T : {gf3_twisted(), gf4_frobenius(), TwistedGroupRing::make(FactorSystem::trivial(FiniteGroup::symmetric(3), DivisionRing::gf(2)))}) {
    auto rho = regular_representation(*T);
    EXPECT_EQ(rho.space().dim, T->rank());
    for (std::size_t g = 0; g < T->rank(); ++g)
      for (std::size_t h = 0; h < T->rank(); ++h)
        EXPECT_EQ(rho(g).apply(unit_vector(T->ring(), T->rank(), h)), (TwistedRingElement::basis(T, g) * TwistedRingElement::basis(T, h)).coefficients());
    EXPECT_EQ(factor_system_from_rep(rho), T->factor_system());
  }
}

TEST(Regular, QuaternionsRejected) {
  auto T = TwistedGroupRing::make(FactorSystem::trivial(FiniteGroup::cyclic(2), DivisionRing::quaternions()));
  EXPECT_EQ(code_of([&] { regular_representation(*T); }), errc::non_commutative_carrier);
}

TEST(Algebra, ProjectiveCommutativeIsAlgebra) {
  EXPECT_TRUE(is_algebra(gf3_twisted()).algebra);
  EXPECT_TRUE(is_algebra(TwistedGroupRing::make(FactorSystem::trivial(FiniteGroup::cyclic(3), DivisionRing::rationals())), 5).algebra);
}

TEST(Algebra, FrobeniusWitness) {
  auto T = gf4_frobenius();
  auto r = is_algebra(T);
  ASSERT_FALSE(r.algebra);
  ASSERT_TRUE(r.witness);
  const auto& w = *r.witness;
  auto a = static_cast<int>(w.a.code());
  EXPECT_NE(oracle::gf4_frob(a), a);
  EXPECT_EQ(w.u, TwistedRingElement::basis(T, 1));
  EXPECT_EQ(w.v, TwistedRingElement::basis(T, 0));
  EXPECT_EQ(w.lhs.coeff(1).code(), oracle::gf4_frob(a));
  EXPECT_EQ(w.rhs.coeff(1).code(), a);
}

TEST(Algebra, QuaternionWitnessIsNonCommutingPair) {
  auto Hq = DivisionRing::quaternions();
  auto T = TwistedGroupRing::make(FactorSystem::trivial(FiniteGroup::cyclic(2), Hq));
  auto r = is_algebra(T);
  ASSERT_FALSE(r.algebra);
  const auto& w = *r.witness;
  EXPECT_NE(w.lhs, w.rhs);
  auto b = w.u.coeff(0);
  EXPECT_EQ(w.lhs.coeff(0), b * w.a);
  EXPECT_EQ(w.rhs.coeff(0), w.a * b);
  auto ua = as_unit(w.a.quaternion()), ub = as_unit(b.quaternion());
  if (ua && ub) {
    auto ab = oracle::quat_unit_mul(ua->unit, ub->unit), ba = oracle::quat_unit_mul(ub->unit, ua->unit);
    EXPECT_EQ(ab.unit, ba.unit);
    EXPECT_EQ(ab.sign, -ba.sign);
  }
  // i j = k, j i = -k.
  auto i = Scalar::from_quaternion(Hq, {Rational(0), Rational(1), Rational(0), Rational(0)});
  auto j = Scalar::from_quaternion(Hq, {Rational(0), Rational(0), Rational(1), Rational(0)});
  auto ij = as_unit((i * j).quaternion()), ji = as_unit((j * i).quaternion());
  auto o = oracle::quat_unit_mul(1, 2);
  ASSERT_TRUE(ij && ji);
  EXPECT_EQ(ij->unit, o.unit);
  EXPECT_EQ(ij->sign, o.sign);
  EXPECT_EQ(ji->sign, -o.sign);
}

TEST(Module, ExhaustiveGf3Twisted) {
  auto T = gf3_twisted();
  auto r = validate_module_axioms(T, regular_representation(*T));
  EXPECT_TRUE(r.exhaustive);
  ASSERT_EQ(r.laws.size(), 5u);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.laws[2].cases, 729u);
}

TEST(Module, SampledOverRationals) {
  auto Q = DivisionRing::rationals();
  auto T = TwistedGroupRing::make(FactorSystem::trivial(FiniteGroup::cyclic(3), Q));
  VectorSpace V(Q, 3);
  auto P = Matrix::from_ints(Q, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  SemilinearProjectiveRep rho(FiniteGroup::cyclic(3), V, {SemilinearMap::identity(V), SemilinearMap(V, P), SemilinearMap(V, P * P)});
  auto r = validate_module_axioms(T, rho, 7, 20);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(module_action(*T, rho, TwistedRingElement::basis(T, 1, Scalar::from_int(Q, 2)), make_vector(Q, {1, 2, 3})), make_vector(Q, {6, 2, 4}));
}

TEST(Module, FrobeniusSemilinearModule) {
  auto T = gf4_frobenius();
  auto K = T->ring();
  VectorSpace V(K, 2);
  SemilinearProjectiveRep rho(FiniteGroup::cyclic(2), V, {SemilinearMap::identity(V), SemilinearMap(V, Matrix::identity(K, 2), RingAutomorphism::frobenius(K, 1))});
  EXPECT_TRUE(validate_module_axioms(T, rho).ok());
}

TEST(Module, NotAssociated) {
  auto T = gf3_twisted();
  auto K = T->ring();
  VectorSpace V(K, 1);
  SemilinearProjectiveRep rho(FiniteGroup::cyclic(2), V, {SemilinearMap::identity(V), SemilinearMap::identity(V)});
  EXPECT_EQ(code_of([&] { validate_module_axioms(T, rho); }), errc::not_associated);
}
