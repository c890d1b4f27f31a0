#include <gtest/gtest.h>

#include "glat/io.hpp"
#include "glat/subgroups.hpp"

using namespace glat;
using io::json;

namespace {

errc code_of(auto&& f, std::string* message = nullptr, std::vector<std::size_t>* witness = nullptr) {
  try {
    f();
  } catch (const error& e) {
    if (message) *message = e.what();
    if (witness) *witness = e.witness();
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return errc::parse_error;
}

}  // namespace

TEST(Parse, SyntaxErrorCarriesLineAndColumn) {
  std::string msg;
  std::vector<std::size_t> w;
  EXPECT_EQ(code_of([] { io::parse_text("{\n  \"ring\": \"gf\",\n  \"p\": 3,,\n}", "x.json"); }, &msg, &w), errc::parse_error);
  EXPECT_NE(msg.find("x.json:3:"), std::string::npos) << msg;
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0], 3u);
}

TEST(Parse, SchemaErrorsNameTheField) {
  std::string msg;
  code_of([] { io::parse_ring(json::parse(R"({"ring":"gf"})")); }, &msg);
  EXPECT_NE(msg.find("ring.p"), std::string::npos) << msg;
  code_of([] { io::parse_ring(json::parse(R"({"ring":"reals"})")); }, &msg);
  EXPECT_NE(msg.find("unknown ring"), std::string::npos);
  auto G = FiniteGroup::cyclic(2);
  auto K = DivisionRing::gf(3);
  code_of([&] { io::parse_factor_system(json::parse(R"({"bracket":{"a,b":1}})"), G, K); }, &msg);
  EXPECT_NE(msg.find("bracket.a,b"), std::string::npos) << msg;
  code_of([&] { io::parse_rep(json::parse(R"({"rep":[{"g":"a","matrix":[[1,0]]}]})"), G, K); }, &msg);
  EXPECT_NE(msg.find("rep[0].matrix"), std::string::npos) << msg;
}

TEST(Parse, Shorthands) {
  EXPECT_EQ(io::parse_ring_shorthand("gf:2^3")->order(), 8);
  EXPECT_EQ(io::parse_ring_shorthand("q")->kind(), RingKind::rationals);
  EXPECT_EQ(io::parse_ring_shorthand(R"({"ring":"gf","p":5})")->order(), 5);
  EXPECT_EQ(code_of([] { io::parse_ring_shorthand("gf:x"); }), errc::parse_error);
  EXPECT_EQ(io::parse_group_shorthand("sym:3").order(), 6u);
  EXPECT_EQ(io::parse_group_shorthand("dihedral:4").order(), 8u);
  EXPECT_EQ(code_of([] { io::parse_group_shorthand("cyclic"); }), errc::parse_error);
}

TEST(Parse, Scalars) {
  auto F4 = DivisionRing::gf(2, 2);
  EXPECT_EQ(io::parse_scalar(F4, json(3)).code(), 3);
  EXPECT_EQ(io::parse_scalar(F4, json::parse("[0,1]")).code(), 2);
  EXPECT_EQ(code_of([&] { io::parse_scalar(F4, json(4)); }), errc::parse_error);
  auto Q = DivisionRing::rationals();
  EXPECT_EQ(io::parse_scalar(Q, json("-3/6")).to_string(), "-1/2");
  EXPECT_EQ(io::parse_scalar(DivisionRing::gf(5), json(-1)).code(), 4);
  auto H = DivisionRing::quaternions();
  EXPECT_EQ(io::scalar_to_json(io::parse_scalar(H, json::parse(R"([0,"1/2",0,1])"))), json::parse(R"(["0","1/2","0","1"])"));
}

TEST(Roundtrip, FactorSystemAndRep) {
  auto G = FiniteGroup::cyclic(2);
  auto K = DivisionRing::gf(2, 2);
  auto fs = FactorSystem::trivial(G, K);
  fs.chi[1] = RingAutomorphism::frobenius(K, 1);
  fs.bracket[1][1] = Scalar::from_code(K, 1);
  EXPECT_EQ(io::parse_factor_system(io::factor_system_to_json(fs), G, K), fs);
  EXPECT_EQ(io::parse_ring(io::ring_to_json(K))->modulus(), K->modulus());

  VectorSpace V(K, 2);
  SemilinearProjectiveRep rho(G, V, {SemilinearMap::identity(V), SemilinearMap(V, Matrix::from_ints(K, {{0, 1}, {1, 0}}), fs.chi[1])});
  EXPECT_EQ(io::parse_rep(io::rep_to_json(rho), G, K), rho);
}

TEST(Roundtrip, MissingElementInRep) {
  auto G = FiniteGroup::cyclic(3);
  std::string msg;
  EXPECT_EQ(code_of([&] { io::parse_rep(json::parse(R"({"rep":[{"g":"a","matrix":[[1]]}]})"), G, DivisionRing::gf(2)); }, &msg), errc::parse_error);
  EXPECT_NE(msg.find("a^2"), std::string::npos);
}

TEST(Report, Deterministic) {
  auto A = conjugation_glattice(FiniteGroup::symmetric(3));
  EXPECT_EQ(io::orbit_report(A).dump(), io::orbit_report(conjugation_glattice(FiniteGroup::symmetric(3))).dump());
  EXPECT_EQ(io::orbit_report(A).dump(), R"({"orbits":[[0],[1,2,3],[4],[5]],"fixed":[0,4,5]})");
}
