#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kzero/grass_tower.hpp"
#include "support.hpp"

using namespace kzero;
using kzero::testing::random_effective;

namespace {

VirtualCharacter vc(const TablePtr& t, std::vector<Int> m) { return VirtualCharacter(t, std::move(m)); }

}  // namespace

TEST_CASE("point_class examples") {
  const auto c2 = catalog_table("C2");
  CHECK(point_class({vc(c2, {0, 2}), 1, 0}) == vc(c2, {-1, 1}));
  CHECK(point_class({VirtualCharacter::zero(c2), 0, 0}).is_zero());
  CHECK(point_class({vc(c2, {2, 2}), 2, 1}) == vc(c2, {1, 0}));
  CHECK_THROWS(point_class({vc(c2, {0, 2}), 2, 0}));
  CHECK_THROWS(point_class({vc(c2, {3, -1}), 1, 0}));
}

TEST_CASE("normalize examples") {
  const auto c2 = catalog_table("C2");
  const auto triv = VirtualCharacter::trivial(c2);
  const auto eps = vc(c2, {0, 1});
  auto t = normalize(eps, triv);
  CHECK(t.M == 2 * eps);
  CHECK(t.n == 1);
  CHECK(t.i == 0);
  CHECK(t.M - regular_rep(c2) == eps - triv);

  t = normalize(VirtualCharacter::zero(c2), VirtualCharacter::zero(c2));
  CHECK(t.M.is_zero());
  CHECK(t.n == 0);
  CHECK(t.i == 0);

  t = normalize(triv, VirtualCharacter::zero(c2));
  CHECK(t.M == vc(c2, {2, 2}));
  CHECK(t.n == 2);
  CHECK(t.i == 1);
  CHECK(point_class(t) == triv);
  CHECK(minimal_ambient(t) == 2);

  CHECK_THROWS(normalize(eps - triv, triv));
  CHECK_THROWS(normalize(triv, -triv));
}

TEST_CASE("property: normalize round trips") {
  for (const char* name : {"C2", "S3", "C3", "D4"}) {
    const auto t = catalog_table(name);
    for (int trial = 0; trial < 300; ++trial) {
      const auto P = random_effective(t), Q = random_effective(t);
      const auto nf = normalize(P, Q);
      CHECK(nf.M.is_effective());
      CHECK(nf.M.rank() == nf.n * t->order());
      CHECK(point_class(nf) == P - Q);
      CHECK(point_class(nf).rank() == nf.i);
    }
  }
}

TEST_CASE("rank_split") {
  const auto c2 = catalog_table("C2");
  const auto triv = VirtualCharacter::trivial(c2);
  const auto eps = vc(c2, {0, 1});
  auto s = rank_split(regular_rep(c2));
  CHECK(s.rank == 2);
  CHECK(s.reduced == eps - triv);
  s = rank_split(triv);
  CHECK(s.rank == 1);
  CHECK(s.reduced.is_zero());
  s = rank_split(eps - triv);
  CHECK(s.rank == 0);
  CHECK(s.reduced == eps - triv);
}

TEST_CASE("property: rank_split is a section of the inclusion") {
  const auto t = catalog_table("S3");
  for (int trial = 0; trial < 100; ++trial) {
    auto red = kzero::testing::random_virtual(t);
    red -= red.rank() * VirtualCharacter::trivial(t);
    const Int k = kzero::testing::uniform(-5, 5);
    const auto s = rank_split(k * VirtualCharacter::trivial(t) + red);
    CHECK(s.rank == k);
    CHECK(s.reduced == red);
  }
}

TEST_CASE("tower_stage examples") {
  const auto c2 = catalog_table("C2");
  const TowerStage s1(c2, 1);
  CHECK(s1.ambient() == 2 * regular_rep(c2));
  CHECK(s1.subspace_rank() == 2);
  CHECK(s1.free_rank() == 6);
  CHECK(s1.ring().free_rank() == 6);
  CHECK(s1.interval() == std::pair<Int, Int>{-1, 1});
  const TowerStage c1(catalog_table("C1"), 1);
  CHECK(c1.ring().free_rank() == 2);
  CHECK(c1.ring().flag()->free_rank() == 2);
  CHECK_THROWS(TowerStage(c2, 0));
  // A copy shares the lazily built ring.
  const TowerStage copy = s1;
  CHECK(&copy.ring() == &s1.ring());
}

TEST_CASE("restriction examples") {
  const auto c2 = catalog_table("C2");
  const TowerStage s1(c2, 1), s2(c2, 2);
  const auto f = restriction(s2, s1);
  const auto& G = s1.ring();
  const auto rho = regular_rep(c2);
  CHECK(f.source_generators() == 4);
  CHECK(f.image(0) == AlgebraElement::one(G.flag()));
  CHECK(f.image(1) == G.generator(1) + AlgebraElement::scalar(G.flag(), rho));
  CHECK(f.apply(generator_variable(s2, 0)) == AlgebraElement::one(G.flag()));
  // Whitney expansion: lambda^2(U + rho) = e2 + e1 rho + lambda^2(rho).
  const auto expected2 = G.generator(2) + rho * G.generator(1) + AlgebraElement::scalar(G.flag(), lambda_op(2, rho));
  CHECK(f.image(2) == expected2);
  CHECK_THROWS(restriction(s1, s2));
  CHECK_THROWS(restriction(TowerStage(c2, 3), s1));
  CHECK_THROWS(restriction(TowerStage(catalog_table("C3"), 2), s1));
}

TEST_CASE("property: restriction is a ring map on generator polynomials") {
  const auto c2 = catalog_table("C2");
  const TowerStage s1(c2, 1), s2(c2, 2);
  const auto f = restriction(s2, s1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = generator_variable(s2, static_cast<std::size_t>(kzero::testing::uniform(0, 4)));
    const auto b = generator_variable(s2, static_cast<std::size_t>(kzero::testing::uniform(0, 4)));
    const auto c = Polynomial::constant(kzero::testing::random_virtual(c2), 4);
    CHECK(f.apply(a * b) == f.apply(a) * f.apply(b));
    CHECK(f.apply(a + c * b) == f.apply(a) + f.apply(c) * f.apply(b));
  }
}

TEST_CASE("source relations vanish in the source and restrict to zero") {
  const auto c2 = catalog_table("C2");
  const TowerStage s1(c2, 1), s2(c2, 2);
  const auto f = restriction(s2, s1);
  const auto rels = source_relations(s2, 2);
  REQUIRE(rels.size() == 2);
  for (const auto& r : rels) {
    CHECK_FALSE(r.terms().empty());
    CHECK(evaluate_in_stage(r, s2).is_zero());
    CHECK(f.apply(r).is_zero());
  }
}

TEST_CASE("surjectivity witness: C2 at i = 1") {
  const auto c2 = catalog_table("C2");
  const TowerStage s1(c2, 1), s2(c2, 2);
  const auto w = surjectivity_witness(s2, s1);
  REQUIRE(w.size() == 3);
  for (const auto& e : w) CHECK(e.certified);
  CHECK(generator_polynomial_to_string(w[0].expression) == "(triv)");
  CHECK(generator_polynomial_to_string(w[1].expression) == "(-triv-eps) + (triv)*L1");
  // lambda^2(x) - lambda^1(x) lambda^1(rho) + (lambda^1(rho)^2 - lambda^2(rho)).
  const auto rho = regular_rep(c2);
  const auto c2coef = rho * rho - lambda_op(2, rho);
  auto by_hand = generator_variable(s2, 2) + Polynomial::constant(-rho, 4) * generator_variable(s2, 1) +
                 Polynomial::constant(c2coef, 4);
  CHECK(by_hand.terms() == w[2].expression.terms());
}

TEST_CASE("surjectivity witness: C3 at i = 1 and C1 towers") {
  const auto c3 = catalog_table("C3");
  for (const auto& e : surjectivity_witness(TowerStage(c3, 2), TowerStage(c3, 1))) CHECK(e.certified);
  const auto c1 = catalog_table("C1");
  for (int i = 1; i <= 3; ++i)
    for (const auto& e : surjectivity_witness(TowerStage(c1, i + 1), TowerStage(c1, i))) CHECK(e.certified);
}

TEST_CASE("kunneth ranks") {
  const auto c2 = catalog_table("C2");
  const auto rho = regular_rep(c2);
  const GrassmannRing P(rho, 1);
  auto K = kunneth(P, P);
  CHECK(K.free_rank() == 4);
  CHECK(certify_independent(K.basis));
  const TowerStage s1(c2, 1);
  K = kunneth(s1.ring(), s1.ring());
  CHECK(K.free_rank() == 36);
  CHECK(K.algebra->free_rank() == 144);
  CHECK(certify_independent(K.basis));
  const GrassmannRing unit(rho, 0);
  const auto U = kunneth(s1.ring(), unit);
  CHECK(U.free_rank() == 6);
  CHECK(U.algebra->free_rank() == s1.ring().flag()->free_rank());
}

TEST_CASE("reports") {
  const auto c2 = catalog_table("C2");
  const auto rep = normalize_report(vc(c2, {0, 1}), vc(c2, {1, 0}));
  CHECK(rep["verified"] == true);
  CHECK(rep["triple"]["M"] == std::vector<Int>{0, 2});
  CHECK(rep.dump() == normalize_report(vc(c2, {0, 1}), vc(c2, {1, 0})).dump());
  const TowerStage s1(c2, 1), s2(c2, 2);
  const auto w = witness_report(s2, s1, surjectivity_witness(s2, s1));
  CHECK(w["all_certified"] == true);
  CHECK(w["witnesses"].size() == 3);
}
