#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kzero/table_io.hpp"
#include "support.hpp"

using namespace kzero;
using kzero::testing::random_effective;
using kzero::testing::random_virtual;

namespace {

VirtualCharacter vc(const TablePtr& t, std::vector<Int> m) { return VirtualCharacter(t, std::move(m)); }

ClassFunction ints(int e, std::vector<Int> v) {
  ClassFunction out;
  for (Int x : v) out.push_back(CyclotomicInteger::constant(e, x));
  return out;
}

Int binom(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("catalog tables load and validate") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const auto t = catalog_table(name);
    CHECK(t->name() == name);
    CHECK(t->size() == t->num_classes());
    Int sum = 0;
    for (Int d : t->degrees()) sum += d * d;
    CHECK(sum == t->order());
    CHECK(catalog_table(name) == t);
  }
  CHECK_THROWS(load_table("C13"));
}

TEST_CASE("load_table examples") {
  const auto c2 = load_table("C2");
  CHECK(c2->value(1, 1) == CyclotomicInteger::constant(2, -1));
  CHECK(c2->degrees() == std::vector<Int>{1, 1});
  const auto s3 = load_table("S3");
  CHECK(s3->class_size(1) == 3);
  CHECK(s3->class_size(2) == 2);
  CHECK(s3->value(2, 2) == CyclotomicInteger::constant(6, -1));
}

TEST_CASE("corrupted S3 table reports row orthogonality") {
  auto d = catalog_data("S3");
  d.rows[2][1] = CyclotomicInteger::constant(6, 1);
  try {
    build_table(std::move(d));
    FAIL("accepted a corrupted table");
  } catch (const ValidationError& e) {
    CHECK(e.relation() == "row orthogonality");
  }
}

TEST_CASE("decompose") {
  const auto c2 = catalog_table("C2");
  const auto s3 = catalog_table("S3");
  CHECK(decompose(c2, ints(2, {2, 0})) == vc(c2, {1, 1}));
  CHECK(decompose(s3, ints(6, {2, 0, -1})) == vc(s3, {0, 0, 1}));
  CHECK(decompose(s3, ints(6, {2, 2, -1})) == vc(s3, {1, -1, 1}));
  CHECK_THROWS(decompose(s3, ints(6, {1, 0, 0})));
  CHECK_THROWS(decompose(s3, ints(6, {1, 0})));
}

TEST_CASE("product") {
  const auto s3 = catalog_table("S3");
  const auto c2 = catalog_table("C2");
  CHECK(product(vc(s3, {0, 0, 1}), vc(s3, {0, 0, 1})) == vc(s3, {1, 1, 1}));
  CHECK(product(vc(c2, {0, 1}), vc(c2, {0, 1})) == vc(c2, {1, 0}));
  const auto a = random_virtual(s3);
  CHECK(a * VirtualCharacter::trivial(s3) == a);
  CHECK_THROWS(vc(s3, {1, 0, 0}) * vc(c2, {1, 0}));
}

TEST_CASE("property: structure-constant product agrees with pointwise product") {
  for (const char* name : {"C4", "S3", "S4", "D4", "Q8", "A4", "C6"}) {
    const auto t = catalog_table(name);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_virtual(t), b = random_virtual(t);
      CHECK(product(a, b) == product_via_values(a, b));
    }
  }
}

TEST_CASE("adams") {
  const auto s3 = catalog_table("S3");
  const auto c2 = catalog_table("C2");
  const auto a = random_virtual(s3);
  CHECK(adams(1, a) == a);
  CHECK(adams(0, a) == a.rank() * VirtualCharacter::trivial(s3));
  CHECK(adams(2, vc(s3, {0, 0, 1})) == vc(s3, {1, -1, 1}));
  CHECK(adams(2, vc(c2, {0, 1})) == vc(c2, {1, 0}));
}

TEST_CASE("property: adams operations are multiplicative and compose") {
  for (const char* name : {"S3", "S4", "A4", "C5", "Q8"}) {
    const auto t = catalog_table(name);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_virtual(t), b = random_virtual(t);
      const Int k = kzero::testing::uniform(0, 7), l = kzero::testing::uniform(0, 7);
      CHECK(adams(k, a * b) == adams(k, a) * adams(k, b));
      CHECK(adams(k, adams(l, a)) == adams(k * l, a));
      CHECK(adams(k, a) == adams_via_values(k, a));
    }
  }
}

TEST_CASE("lambda_op") {
  const auto s3 = catalog_table("S3");
  const auto c2 = catalog_table("C2");
  CHECK(lambda_op(0, random_virtual(s3)) == VirtualCharacter::trivial(s3));
  CHECK(lambda_op(2, vc(s3, {0, 0, 1})) == vc(s3, {0, 1, 0}));
  CHECK(lambda_op(2, regular_rep(c2)) == vc(c2, {0, 1}));
  // 2 lambda^2 = std^2 - psi^2(std).
  const auto std_ = vc(s3, {0, 0, 1});
  CHECK(2 * lambda_op(2, std_) == std_ * std_ - adams(2, std_));
}

TEST_CASE("property: Whitney sum formula over S3 and S4") {
  for (const char* name : {"S3", "S4"}) {
    const auto t = catalog_table(name);
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = random_virtual(t), b = random_virtual(t);
      const auto la = lambda_series(a, 4), lb = lambda_series(b, 4), lab = lambda_series(a + b, 4);
      for (std::size_t k = 0; k <= 4; ++k) {
        auto sum = VirtualCharacter::zero(t);
        for (std::size_t i = 0; i <= k; ++i) sum += la[i] * lb[k - i];
        CHECK(lab[k] == sum);
      }
    }
  }
}

TEST_CASE("property: rank of lambda for effective classes") {
  for (const char* name : {"S3", "C3", "D4"}) {
    const auto t = catalog_table(name);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_effective(t, 2);
      const Int d = a.rank();
      const auto lam = lambda_series(a, d + 2);
      for (Int k = 0; k <= d + 2; ++k) CHECK(lam[static_cast<std::size_t>(k)].rank() == binom(d, k));
      for (Int k = d + 1; k <= d + 2; ++k) CHECK(lam[static_cast<std::size_t>(k)].is_zero());
      CHECK(lam[static_cast<std::size_t>(d)].rank() == 1);
    }
  }
}

TEST_CASE("property: rank is a ring homomorphism") {
  const auto t = catalog_table("S4");
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_virtual(t), b = random_virtual(t);
    CHECK((a * b).rank() == a.rank() * b.rank());
    CHECK((a + b).rank() == a.rank() + b.rank());
  }
}

TEST_CASE("dual") {
  const auto s3 = catalog_table("S3");
  const auto c3 = catalog_table("C3");
  CHECK(dual(VirtualCharacter::trivial(s3)) == VirtualCharacter::trivial(s3));
  CHECK(dual(vc(s3, {0, 0, 1})) == vc(s3, {0, 0, 1}));
  const auto w = vc(c3, {0, 1, 0});
  const auto dv = dual(w).values();
  CHECK(dv[1] == cyclo_root(3, 2));
  CHECK(dv[2] == cyclo_root(3, 1));
  CHECK(dual(w) == vc(c3, {0, 0, 1}));
}

TEST_CASE("property: dual is an involutive automorphism commuting with lambda") {
  for (const char* name : {"C3", "C5", "A4", "S4", "Q8"}) {
    const auto t = catalog_table(name);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_virtual(t), b = random_virtual(t);
      CHECK(dual(dual(a)) == a);
      CHECK(dual(a * b) == dual(a) * dual(b));
      const Int k = kzero::testing::uniform(0, 4);
      CHECK(dual(lambda_op(k, a)) == lambda_op(k, dual(a)));
      // Conjugating values is the same as precomposing with the inverse power map.
      CHECK(dual(a) == adams(t->exponent() - 1, a));
    }
  }
}

TEST_CASE("regular representation and augmentation ideal") {
  const auto c1 = catalog_table("C1");
  const auto c2 = catalog_table("C2");
  const auto s3 = catalog_table("S3");
  CHECK(regular_rep(c2) == vc(c2, {1, 1}));
  CHECK(regular_rep(s3) == vc(s3, {1, 1, 2}));
  CHECK(regular_rep(c1) == vc(c1, {1}));
  CHECK(decompose(s3, ints(6, {6, 0, 0})) == regular_rep(s3));
  CHECK(augmentation_ideal(c2) == vc(c2, {0, 1}));
  CHECK(augmentation_ideal(s3) == vc(s3, {0, 1, 2}));
  CHECK(augmentation_ideal(c1).is_zero());
  for (const auto& name : catalog_names()) {
    const auto t = catalog_table(name);
    CHECK(regular_rep(t).rank() == t->order());
    CHECK(augmentation_ideal(t).is_effective());
    CHECK(augmentation_ideal(t).rank() == t->order() - 1);
  }
}

TEST_CASE("embed_in_regular") {
  const auto s3 = catalog_table("S3");
  const auto c2 = catalog_table("C2");
  auto e = embed_in_regular(vc(s3, {0, 0, 1}));
  CHECK(e.copies == 1);
  CHECK(e.complement == vc(s3, {1, 1, 1}));
  e = embed_in_regular(VirtualCharacter::zero(s3));
  CHECK(e.copies == 0);
  CHECK(e.complement.is_zero());
  e = embed_in_regular(vc(c2, {3, 0}));
  CHECK(e.copies == 3);
  CHECK(e.complement == vc(c2, {0, 3}));
  CHECK_THROWS(embed_in_regular(vc(c2, {-1, 0})));
}

TEST_CASE("property: embed_in_regular is minimal") {
  for (const char* name : {"S3", "S4", "C4", "D4"}) {
    const auto t = catalog_table(name);
    const auto rho = regular_rep(t);
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = random_effective(t, 5);
      const auto e = embed_in_regular(a);
      CHECK(e.complement.is_effective());
      CHECK(a + e.complement == e.copies * rho);
      if (e.copies > 0) CHECK_FALSE(((e.copies - 1) * rho - a).is_effective());
    }
  }
}

TEST_CASE("exterior power oracle examples") {
  const auto c2 = catalog_table("C2");
  const auto g = concrete_group("C2");
  const auto reg = regular_permutation_rep(g);
  CHECK(exterior_power_oracle(reg, 0, *c2) == ints(2, {1, 1}));
  CHECK(exterior_power_oracle(reg, 2, *c2) == ints(2, {1, -1}));
  CHECK(exterior_power_oracle(reg, 1, *c2) == reg.character(*c2));
}

TEST_CASE("property: lambda_op agrees with wedge characters of regular representations") {
  for (const char* name : {"C2", "C3", "S3"}) {
    const auto t = catalog_table(name);
    const auto reg = regular_permutation_rep(concrete_group(name));
    CHECK(decompose(t, reg.character(*t)) == regular_rep(t));
    for (std::size_t k = 0; k <= static_cast<std::size_t>(t->order()); ++k)
      CHECK(decompose(t, exterior_power_oracle(reg, k, *t)) == lambda_op(static_cast<Int>(k), regular_rep(t)));
  }
}

TEST_CASE("lambda^2 of std matches the explicit 2x2 wedge") {
  const auto s3 = catalog_table("S3");
  const auto std_ = standard_matrix_rep(concrete_group("S3"));
  CHECK(decompose(s3, exterior_power_oracle(std_, 2, *s3)) == lambda_op(2, vc(s3, {0, 0, 1})));
}

TEST_CASE("equivariant splitting examples") {
  // C2 swapping two coordinates onto the trivial line.
  const auto c2 = concrete_group("C2");
  const auto L = regular_permutation_rep(c2);
  const auto M = trivial_matrix_rep(c2);
  const auto phi = RationalMatrix::from_ints(1, 2, {1, 1});
  const auto s = RationalMatrix::from_ints(2, 1, {1, 0});
  const auto sbar = equivariant_splitting(L, M, phi, s);
  CHECK(sbar(0, 0) == Rational(1, 2));
  CHECK(sbar(1, 0) == Rational(1, 2));

  const auto c1 = concrete_group("C1");
  const auto I2 = RationalMatrix::identity(2);
  const auto triv2 = trivial_matrix_rep(c1, 2);
  const auto s1 = RationalMatrix::from_ints(2, 2, {1, 0, 0, 1});
  CHECK(equivariant_splitting(triv2, triv2, I2, s1) == s1);

  const auto s3 = concrete_group("S3");
  const auto R = regular_permutation_rep(s3);
  const auto ones = RationalMatrix::from_ints(1, 6, {1, 1, 1, 1, 1, 1});
  auto e0 = RationalMatrix(6, 1);
  e0(0, 0) = 1;
  const auto avg = equivariant_splitting(R, trivial_matrix_rep(s3), ones, e0);
  for (std::size_t i = 0; i < 6; ++i) CHECK(avg(i, 0) == Rational(1, 6));
}

TEST_CASE("equivariant splitting rejects bad inputs") {
  const auto c2 = concrete_group("C2");
  const auto L = regular_permutation_rep(c2);
  const auto M = trivial_matrix_rep(c2);
  CHECK_THROWS_AS(equivariant_splitting(L, M, RationalMatrix::from_ints(1, 2, {1, 0}),
                                        RationalMatrix::from_ints(2, 1, {1, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(equivariant_splitting(L, M, RationalMatrix::from_ints(1, 2, {1, 1}),
                                        RationalMatrix::from_ints(2, 1, {1, 1})),
                  std::invalid_argument);
}

TEST_CASE("property: averaged sections over S3 are equivariant sections") {
  const auto s3 = concrete_group("S3");
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = kzero::testing::random_splitting_instance(s3);
    const auto sbar = equivariant_splitting(inst.L, inst.M, inst.phi, inst.s);
    CHECK(inst.phi * sbar == RationalMatrix::identity(inst.M.dimension()));
    for (std::size_t g = 0; g < s3->order(); ++g) CHECK(sbar * inst.M(g) == inst.L(g) * sbar);
  }
}

TEST_CASE("table documents round trip") {
  for (const auto& name : catalog_names()) {
    const auto t = catalog_table(name);
    const auto doc = table_to_json(*t);
    const auto back = table_from_json(nlohmann::json::parse(doc.dump()));
    CHECK(table_to_json(*back) == doc);
    CHECK(back->names() == t->names());
  }
}

TEST_CASE("table documents reject floats and corrupt data") {
  auto doc = table_to_json(*catalog_table("C2"));
  auto bad = doc;
  bad["table"]["rows"][1][1] = -1.5;
  CHECK_THROWS(table_from_json(bad));
  bad = doc;
  bad["group"]["classes"][1]["size"] = 2;
  CHECK_THROWS_AS(table_from_json(bad), ValidationError);
}

TEST_CASE("class vectors") {
  const auto s3 = catalog_table("S3");
  CHECK(parse_class_vector(s3, "1,0,2") == vc(s3, {1, 0, 2}));
  CHECK_THROWS(parse_class_vector(s3, "1,0"));
  CHECK_THROWS(parse_class_vector(s3, "1,x,0"));
  CHECK(vc(s3, {1, 1, 2}).to_string() == "triv+sgn+2std");
  CHECK(vc(s3, {0, -1, 0}).to_string() == "-sgn");
}
