#include <gtest/gtest.h>

#include <set>

#include "glat/lattice.hpp"
#include "glat/linalg.hpp"
#include "glat/rep.hpp"
#include "glat/subgroups.hpp"
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

using Order = std::vector<std::vector<bool>>;

// 0 < 1,2,3 < 4, atoms pairwise incomparable.
FiniteLattice diamond() {
  Order leq(5, std::vector<bool>(5, false));
  for (std::size_t x = 0; x < 5; ++x) {
    leq[x][x] = true;
    leq[0][x] = true;
    leq[x][4] = true;
  }
  return lattice_from_order(leq);
}

GLatticeAction c3_shift_gf2() {
  auto F = DivisionRing::gf(2);
  VectorSpace V(F, 3);
  Matrix P = Matrix::from_ints(F, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  SemilinearProjectiveRep rho(FiniteGroup::cyclic(3), V, {SemilinearMap::identity(V), SemilinearMap(V, P), SemilinearMap(V, P * P)});
  return induced_glattice(rho);
}

// Covers computed directly: x < y with nothing strictly between.
std::set<std::pair<std::size_t, std::size_t>> cover_oracle(const FiniteLattice& L) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < L.size(); ++x)
    for (std::size_t y = 0; y < L.size(); ++y) {
      if (!L.less(x, y)) continue;
      bool between = false;
      for (std::size_t z = 0; z < L.size() && !between; ++z) between = L.less(x, z) && L.less(z, y);
      if (!between) out.insert({x, y});
    }
  return out;
}

void expect_caught(const GLatticeAction& A, int axiom) {
  auto v = check_axiom(A, axiom);
  ASSERT_TRUE(v.has_value()) << "axiom " << axiom;
  EXPECT_EQ(v->axiom, axiom);
  EXPECT_TRUE(replay_violation(A, *v));
}

}  // namespace

TEST(Lattice, BooleanOnThreeAtoms) {
  auto L = boolean_lattice(3);
  EXPECT_EQ(L.size(), 8u);
  EXPECT_EQ(L.meet(0b011, 0b110), 0b010u);
  EXPECT_EQ(L.join(0b001, 0b100), 0b101u);
  EXPECT_EQ(L.bottom(), 0u);
  EXPECT_EQ(L.top(), 7u);
}

TEST(Lattice, ChainMeetIsMin) {
  auto L = chain_lattice(5);
  for (std::size_t x = 0; x < 5; ++x)
    for (std::size_t y = 0; y < 5; ++y) {
      EXPECT_EQ(L.meet(x, y), std::min(x, y));
      EXPECT_EQ(L.join(x, y), std::max(x, y));
    }
}

TEST(Lattice, RejectsNonLattices) {
  EXPECT_EQ(code_of([] { lattice_from_order({{true, true}, {true, true}}); }), errc::not_partial_order);
  EXPECT_EQ(code_of([] { lattice_from_order({{false}}); }), errc::not_partial_order);
  // Two incomparable maximal elements above a bottom: no join.
  EXPECT_EQ(code_of([] { lattice_from_order({{true, true, true}, {false, true, false}, {false, false, true}}); }), errc::no_join);
  EXPECT_EQ(code_of([] { lattice_from_order({{true, false, true}, {false, true, true}, {false, false, true}}); }), errc::no_meet);
}

TEST(Lattice, RejectsMeetTableDisagreeingWithOrder) {
  LatticeCandidate c;
  c.leq = {{true, true, true}, {false, true, true}, {false, false, true}};
  c.meet = std::vector<std::vector<std::size_t>>{{0, 0, 0}, {0, 1, 1}, {0, 1, 1}};
  EXPECT_EQ(code_of([&] { validate_lattice(c); }), errc::table_mismatch);
}

TEST(Lattice, CoversMatchTransitiveReduction) {
  for (const auto& L : {boolean_lattice(3), chain_lattice(4), diamond(), subgroup_lattice(FiniteGroup::symmetric(4)).lattice}) {
    auto c = L.covers();
    EXPECT_EQ(std::set(c.begin(), c.end()), cover_oracle(L));
  }
}

TEST(Automorphisms, BooleanAndDiamond) {
  EXPECT_EQ(lattice_automorphism_group(boolean_lattice(3)).size(), 6u);
  EXPECT_EQ(lattice_automorphism_group(diamond()).size(), 6u);
  EXPECT_EQ(lattice_automorphism_group(chain_lattice(6)).size(), 1u);
}

TEST(Automorphisms, SubspaceLatticesMatchProjectiveSemilinearGroup) {
  auto S2 = enumerate_subspaces(VectorSpace(DivisionRing::gf(2), 3));
  EXPECT_EQ(static_cast<std::int64_t>(lattice_automorphism_group(S2.lattice).size()), oracle::pgaml_order(2, 1, 3));
  auto S3 = enumerate_subspaces(VectorSpace(DivisionRing::gf(3), 3));
  EXPECT_EQ(static_cast<std::int64_t>(lattice_automorphism_group(S3.lattice).size()), oracle::pgaml_order(3, 1, 3));
}

TEST(Automorphisms, EveryResultPreservesOrder) {
  auto L = subgroup_lattice(FiniteGroup::dihedral(4)).lattice;
  for (const auto& a : lattice_automorphism_group(L))
    for (std::size_t x = 0; x < L.size(); ++x)
      for (std::size_t y = 0; y < L.size(); ++y) EXPECT_EQ(L.leq(x, y), L.leq(a(x), a(y)));
}

TEST(Automorphisms, MakeRejectsOrderBreakingPermutation) {
  auto L = chain_lattice(3);
  EXPECT_EQ(code_of([&] { LatticeAutomorphism::make(L, {2, 1, 0}); }), errc::not_automorphism);
  EXPECT_EQ(code_of([&] { LatticeAutomorphism::make(L, {0, 0, 2}); }), errc::not_automorphism);
}

TEST(GLattice, ValidExamples) {
  EXPECT_TRUE(validate_glattice(conjugation_glattice(FiniteGroup::symmetric(3))).ok());
  EXPECT_TRUE(validate_glattice(powerset_glattice(FiniteGroup::cyclic(2), {{0, 1}, {1, 0}})).ok());
  auto A = c3_shift_gf2();
  EXPECT_EQ(A.lattice().size(), 16u);
  EXPECT_TRUE(validate_glattice(A).ok());
}

TEST(GLattice, MutationAxiom1) {
  // C3 on B2 with both nontrivial elements swapping the atoms.
  GLatticeAction A(FiniteGroup::cyclic(3), boolean_lattice(2), {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 2, 1, 3}});
  expect_caught(A, 1);
  for (int k : {2, 3, 4, 5}) EXPECT_FALSE(check_axiom(A, k)) << k;
}

TEST(GLattice, MutationAxiom2) {
  GLatticeAction A(FiniteGroup::cyclic(1), boolean_lattice(2), {{0, 2, 1, 3}});
  expect_caught(A, 2);
  for (int k : {3, 4, 5}) EXPECT_FALSE(check_axiom(A, k)) << k;
}

TEST(GLattice, MutationAxiom3) {
  // Reversing a chain reverses the order.
  GLatticeAction A(FiniteGroup::cyclic(2), chain_lattice(3), {{0, 1, 2}, {2, 1, 0}});
  expect_caught(A, 3);
  EXPECT_FALSE(check_axiom(A, 1));
  EXPECT_FALSE(check_axiom(A, 2));
}

TEST(GLattice, MutationAxiom4) {
  // a: 0 -> 0, atoms and top -> top. Joins survive, meets do not.
  GLatticeAction A(FiniteGroup::cyclic(2), boolean_lattice(2), {{0, 1, 2, 3}, {0, 3, 3, 3}});
  expect_caught(A, 4);
  EXPECT_FALSE(check_axiom(A, 5));
}

TEST(GLattice, MutationAxiom5) {
  // a: atoms and bottom -> bottom, top fixed. Meets survive, joins do not.
  GLatticeAction A(FiniteGroup::cyclic(2), boolean_lattice(2), {{0, 1, 2, 3}, {0, 0, 0, 3}});
  expect_caught(A, 5);
  EXPECT_FALSE(check_axiom(A, 4));
}

TEST(GLattice, SingleEntryMutationsOfShiftActionAreCaught) {
  auto base = c3_shift_gf2();
  auto table = base.table();
  std::size_t caught = 0, total = 0;
  for (std::size_t x = 1; x + 1 < 16; ++x) {
    auto t = table;
    std::swap(t[1][x], t[1][x + 1]);
    if (t == table) continue;
    ++total;
    GLatticeAction A(base.group(), base.lattice(), t);
    auto r = validate_glattice(A);
    caught += !r.ok();
    for (const auto& v : r.violations) EXPECT_TRUE(replay_violation(A, v));
  }
  EXPECT_EQ(caught, total);
}

TEST(GLattice, ShapeErrors) {
  EXPECT_EQ(code_of([] { GLatticeAction(FiniteGroup::cyclic(2), chain_lattice(2), {{0, 1}}); }), errc::shape_mismatch);
  EXPECT_EQ(code_of([] { GLatticeAction(FiniteGroup::cyclic(1), chain_lattice(2), {{0, 5}}); }), errc::shape_mismatch);
  EXPECT_EQ(code_of([] { check_axiom(GLatticeAction(FiniteGroup::cyclic(1), chain_lattice(2), {{0, 1}}), 6); }), errc::shape_mismatch);
}

TEST(Correspondence, ActionHomomorphismRoundtrip) {
  for (const auto& A : {conjugation_glattice(FiniteGroup::symmetric(3)), powerset_glattice(FiniteGroup::cyclic(2), {{0, 1}, {1, 0}}),
                        c3_shift_gf2()}) {
    auto rho = homomorphism_from_action(A);
    EXPECT_EQ(action_from_homomorphism(A.group(), A.lattice(), rho), A);
  }
}

TEST(Correspondence, RejectsNonHomomorphism) {
  auto L = boolean_lattice(2);
  auto swap = LatticeAutomorphism::make(L, {0, 2, 1, 3});
  auto id = LatticeAutomorphism::identity(4);
  EXPECT_EQ(code_of([&] { action_from_homomorphism(FiniteGroup::cyclic(3), L, {id, swap, swap}); }), errc::not_homomorphism);
  GLatticeAction bad(FiniteGroup::cyclic(2), chain_lattice(3), {{0, 1, 2}, {2, 1, 0}});
  EXPECT_EQ(code_of([&] { homomorphism_from_action(bad); }), errc::not_automorphism);
}

TEST(Powerset, SwapOrbitsAndRegularC3Fixed) {
  auto A = powerset_glattice(FiniteGroup::cyclic(2), {{0, 1}, {1, 0}});
  EXPECT_EQ(orbits(A), (std::vector<std::vector<std::size_t>>{{0}, {1, 2}, {3}}));
  auto B = powerset_glattice(FiniteGroup::cyclic(3), {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  EXPECT_EQ(fixed_points(B), (std::vector<std::size_t>{0, 7}));
}

TEST(Powerset, OrbitCountMatchesBurnside) {
  // Subsets of S4 acting on 4 points: one orbit per size, 5 in total.
  auto S4 = FiniteGroup::symmetric(4);
  std::vector<std::vector<std::size_t>> gset;
  for (std::size_t g = 0; g < S4.order(); ++g) {
    std::vector<std::size_t> row;
    for (char c : S4.label(g)) row.push_back(static_cast<std::size_t>(c - '0'));
    gset.push_back(row);
  }
  EXPECT_EQ(orbits(powerset_glattice(S4, gset)).size(), 5u);
}

TEST(Powerset, RejectsNonGSets) {
  EXPECT_EQ(code_of([] { powerset_glattice(FiniteGroup::cyclic(2), {{1, 0}, {0, 1}}); }), errc::not_gset);
  EXPECT_EQ(code_of([] { powerset_glattice(FiniteGroup::cyclic(3), {{0, 1}, {1, 0}, {1, 0}}); }), errc::not_gset);
}

TEST(Orbits, ShiftOnGf2Cubed) {
  auto A = c3_shift_gf2();
  auto orb = orbits(A);
  EXPECT_EQ(orb.size(), 8u);
  EXPECT_EQ(fixed_points(A).size(), 4u);
  std::size_t covered = 0;
  for (const auto& o : orb) covered += o.size();
  EXPECT_EQ(covered, 16u);
}

TEST(Dot, CoversAndOrbitColours) {
  auto A = powerset_glattice(FiniteGroup::cyclic(2), {{0, 1}, {1, 0}});
  auto orb = orbits(A);
  auto dot = hasse_dot(A.lattice(), &orb);
  EXPECT_NE(dot.find("n0 -> n1;"), std::string::npos);
  EXPECT_EQ(dot.find("n0 -> n3;"), std::string::npos);
  auto colour_of = [&](int x) {
    auto p = dot.find("n" + std::to_string(x) + " [label");
    auto c = dot.find("fillcolor=", p);
    return dot.substr(c, 20);
  };
  EXPECT_EQ(colour_of(1), colour_of(2));
  EXPECT_NE(colour_of(0), colour_of(1));
}
