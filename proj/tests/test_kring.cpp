#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include "kzero/kring_io.hpp"
#include "support.hpp"

using namespace kzero;
using kzero::testing::uniform;

namespace {

VirtualCharacter vc(const TablePtr& t, std::vector<Int> m) { return VirtualCharacter(t, std::move(m)); }

AlgebraElement random_element(const AlgebraPtr& A, Int bound = 2) {
  std::vector<Int> d(A->tower().element_size(A->num_vars()));
  for (auto& v : d) v = uniform(-bound, bound);
  return AlgebraElement(A, d);
}

Polynomial random_polynomial(const AlgebraPtr& A, int max_degree, int terms) {
  Polynomial p(A->base(), A->num_vars());
  for (int k = 0; k < terms; ++k) {
    Monomial m(A->num_vars(), 0);
    int budget = static_cast<int>(uniform(0, max_degree));
    for (auto& a : m) {
      a = static_cast<int>(uniform(0, budget));
      budget -= a;
    }
    std::vector<Int> c(A->base()->size());
    for (auto& v : c) v = uniform(-3, 3);
    p.add_term(m, c);
  }
  return p;
}

Polynomial theta_in(const AlgebraPtr& A, const VirtualCharacter& E) {
  Polynomial p(A->base(), 1);
  const auto th = theta_polynomial(E);
  for (std::size_t i = 0; i < th.size(); ++i) p.add_term(Monomial{static_cast<int>(i)}, th[i]);
  return p;
}

Int factorial(Int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

Monomial mono(std::initializer_list<int> a) { return Monomial(a); }

}  // namespace

TEST_CASE("theta_polynomial examples") {
  const auto c2 = catalog_table("C2");
  const auto triv = VirtualCharacter::trivial(c2);
  const auto eps = vc(c2, {0, 1});
  auto th = theta_polynomial(regular_rep(c2));
  REQUIRE(th.size() == 3);
  CHECK(th[0] == eps);
  CHECK(th[1] == -(triv + eps));
  CHECK(th[2] == triv);
  th = theta_polynomial(eps);
  CHECK(th == std::vector<VirtualCharacter>{eps, -triv});
  th = theta_polynomial(2 * triv);
  CHECK(th == std::vector<VirtualCharacter>{triv, -2 * triv, triv});
  CHECK_THROWS(theta_polynomial(VirtualCharacter::zero(c2)));
  CHECK_THROWS(theta_polynomial(eps - triv));
}

TEST_CASE("projective_bundle examples") {
  const auto c3 = catalog_table("C3");
  const auto chi = vc(c3, {0, 1, 0});
  auto A = projective_bundle(chi);
  CHECK(A->free_rank() == 1);
  CHECK(AlgebraElement::variable(A, 0) == AlgebraElement::scalar(A, chi));

  const auto c2 = catalog_table("C2");
  A = projective_bundle(regular_rep(c2));
  CHECK(A->free_rank() == 2);
  const auto t = AlgebraElement::variable(A, 0);
  const auto expected = vc(c2, {1, 1}) * t - AlgebraElement::scalar(A, vc(c2, {0, 1}));
  CHECK(t * t == expected);

  A = projective_bundle(2 * VirtualCharacter::trivial(c2));
  const auto s = AlgebraElement::variable(A, 0);
  CHECK(s * s == 2 * s - AlgebraElement::one(A));
}

TEST_CASE("flag_bundle examples") {
  const auto c2 = catalog_table("C2");
  const auto rho = regular_rep(c2);
  auto A = flag_bundle(rho, 2);
  CHECK(A->free_rank() == 2);
  CHECK(A->basis() == std::vector<Monomial>{mono({0, 0}), mono({1, 0})});
  A = flag_bundle(2 * rho, 2);
  CHECK(A->free_rank() == 12);
  CHECK(A->bounds() == std::vector<int>{3, 2});
  A = flag_bundle(rho, 0);
  CHECK(A->free_rank() == 1);
  CHECK_THROWS(flag_bundle(rho, 3));
  CHECK_THROWS(flag_bundle(rho, -1));
  CHECK_THROWS(flag_bundle(vc(c2, {1, -1}), 0));
}

TEST_CASE("reduce examples") {
  const auto c2 = catalog_table("C2");
  const auto A = projective_bundle(regular_rep(c2));
  Polynomial t2(c2, 1);
  t2.add_term(mono({2}), VirtualCharacter::trivial(c2));
  const auto r = reduce(t2, A);
  CHECK(r.coefficient(mono({1})) == vc(c2, {1, 1}));
  CHECK(r.coefficient(mono({0})) == vc(c2, {0, -1}));

  const auto F = flag_bundle(2 * regular_rep(c2), 2);
  Polynomial t1(c2, 2);
  t1.add_term(mono({1, 0}), VirtualCharacter::trivial(c2));
  CHECK(reduce(t1, F) == AlgebraElement::variable(F, 0));
  const auto x = Polynomial::variable(c2, 2, 0) * Polynomial::variable(c2, 2, 1) +
                 Polynomial::variable(c2, 2, 1) * Polynomial::variable(c2, 2, 0);
  const auto y = reduce(x, F);
  CHECK(y.terms().size() == 1);
  CHECK(y.coefficient(mono({1, 1})) == 2 * VirtualCharacter::trivial(c2));
}

TEST_CASE("grassmann_ring examples") {
  const auto c2 = catalog_table("C2");
  const auto rho = regular_rep(c2);
  const GrassmannRing G1(rho, 1);
  CHECK(G1.free_rank() == 2);
  CHECK(G1.generator(1) == AlgebraElement::variable(G1.flag(), 0));
  CHECK(G1.flag()->rules()[0].terms() == projective_bundle(rho)->rules()[0].terms());

  const GrassmannRing G2(2 * rho, 2);
  CHECK(G2.free_rank() == 6);
  CHECK(G2.flag()->free_rank() == 12);
  CHECK(certify_independent(G2.schur_basis()));

  for (const auto& E : {rho, 3 * VirtualCharacter::trivial(c2) + vc(c2, {0, 1}), 2 * rho}) {
    const int n = static_cast<int>(E.rank());
    const GrassmannRing G(E, n);
    CHECK(G.free_rank() == 1);
    CHECK(G.generator(static_cast<std::size_t>(n)) == AlgebraElement::scalar(G.flag(), lambda_op(n, E)));
  }
  CHECK_THROWS(GrassmannRing(rho, 3));
}

TEST_CASE("lambda_of_class examples") {
  const auto c2 = catalog_table("C2");
  const auto rho = regular_rep(c2);
  const auto A = projective_bundle(2 * rho);
  const auto t = AlgebraElement::variable(A, 0);
  for (Int k = 0; k <= 5; ++k) {
    const auto expected = (k % 2 == 0 ? 1 : -1) * t.pow(static_cast<unsigned>(k));
    CHECK(lambda_of_class(k, -t) == expected);
  }
  const auto F = flag_bundle(2 * rho, 2);
  const auto t1 = AlgebraElement::variable(F, 0), t2 = AlgebraElement::variable(F, 1);
  CHECK(lambda_of_class(2, t1 + t2) == t1 * t2);

  const auto P = projective_bundle(rho);
  const auto x = AlgebraElement::scalar(P, rho) - AlgebraElement::variable(P, 0);
  CHECK(lambda_of_class(2, x).is_zero());
  CHECK(lambda_of_class(1, x) == x);
  CHECK_THROWS(lambda_of_class(2, vc(c2, {0, 1}) * AlgebraElement::variable(P, 0)));
}

TEST_CASE("free_rank examples") {
  const auto c1 = catalog_table("C1");
  const auto E = 5 * VirtualCharacter::trivial(c1);
  CHECK(free_rank(*flag_bundle(E, 3)) == 60);
  CHECK(free_rank(GrassmannRing(4 * VirtualCharacter::trivial(c1), 2)) == 6);
  CHECK(free_rank(*flag_bundle(E, 0)) == 1);
  CHECK(free_rank(GrassmannRing(E, 0)) == 1);
}

TEST_CASE("property: flag ranks telescope to n!/(n-r)!") {
  for (const char* name : {"C1", "C2", "S3"}) {
    const auto t = catalog_table(name);
    for (Int n = 0; n <= 6; ++n) {
      // Ambient of rank n: as many copies of rho as fit, topped up with triv.
      const Int k = n / t->order();
      auto E = k * regular_rep(t) + (n - k * t->order()) * VirtualCharacter::trivial(t);
      for (int r = 0; r <= n; ++r) {
        const auto A = flag_bundle(E, r);
        Int prod = 1;
        for (int b : A->bounds()) prod *= b + 1;
        CHECK(prod == factorial(n) / factorial(n - r));
        CHECK(static_cast<Int>(A->basis().size()) == prod);
        CHECK(A->free_rank() == falling_factorial(n, r));
      }
    }
  }
}

TEST_CASE("property: reduction is confluent") {
  const auto c2 = catalog_table("C2");
  const auto s3 = catalog_table("S3");
  std::mt19937_64 gen(7);
  const std::vector<AlgebraPtr> algebras = {
      flag_bundle(2 * regular_rep(c2), 3), flag_bundle(regular_rep(s3), 3),
      projective_bundle(vc(s3, {1, 0, 1})), flag_bundle(regular_rep(c2) + vc(c2, {0, 1}), 3)};
  for (const auto& A : algebras) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto p = random_polynomial(A, 6, 5);
      const auto nf = reduce(p, A);
      const auto top = reduce_by_rewriting(p, A);
      CHECK(top.terms() == nf.to_polynomial().terms());
      for (int order = 0; order < 3; ++order)
        CHECK(reduce_by_rewriting(p, A, kernels::RewriteOrder::Random, &gen).terms() == top.terms());
    }
  }
}

TEST_CASE("property: theta(t) reduces to zero") {
  for (const char* name : {"C1", "C2", "C3", "S3", "D4"}) {
    const auto t = catalog_table(name);
    for (int trial = 0; trial < 5; ++trial) {
      auto E = kzero::testing::random_effective(t, 2);
      if (E.rank() == 0 || E.rank() > 8) continue;
      const auto A = projective_bundle(E);
      CHECK(reduce(theta_in(A, E), A).is_zero());
    }
  }
}

TEST_CASE("property: C1 projective bundles are Z[t]/((t-1)^n)") {
  const auto c1 = catalog_table("C1");
  for (int n = 1; n <= 6; ++n) {
    const auto A = projective_bundle(n * VirtualCharacter::trivial(c1));
    // (t-1)^n = sum_k C(n,k) (-1)^(n-k) t^k, so t^n = -sum_{k<n} C(n,k) (-1)^(n-k) t^k.
    const auto& rule = A->rules()[0].terms();
    for (int k = 0; k < n; ++k) {
      const Int expected = -binomial(n, k) * ((n - k) % 2 == 0 ? 1 : -1);
      const auto it = rule.find(Monomial{k});
      CHECK((it == rule.end() ? 0 : it->second[0]) == expected);
    }
    // Reduction of random integer polynomials matches division by (t-1)^n.
    std::vector<Int> modulus(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) modulus[static_cast<std::size_t>(k)] = binomial(n, k) * ((n - k) % 2 == 0 ? 1 : -1);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Int> coeffs(static_cast<std::size_t>(uniform(1, 9)));
      for (auto& c : coeffs) c = uniform(-4, 4);
      Polynomial p(c1, 1);
      for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term(Monomial{static_cast<int>(k)}, {coeffs[k]});
      auto rem = coeffs;
      for (std::size_t d = rem.size(); d-- > static_cast<std::size_t>(n);) {
        const Int c = rem[d];
        for (int k = 0; k <= n; ++k) rem[d - static_cast<std::size_t>(n) + static_cast<std::size_t>(k)] -= c * modulus[static_cast<std::size_t>(k)];
      }
      rem.resize(static_cast<std::size_t>(n), 0);
      const auto x = reduce(p, A);
      for (int k = 0; k < n; ++k) CHECK(x.coefficient(Monomial{k})[0] == rem[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("property: full flags split the lambda series") {
  for (const char* name : {"C1", "C2", "C3", "S3"}) {
    const auto t = catalog_table(name);
    for (int trial = 0; trial < 4; ++trial) {
      auto E = kzero::testing::random_effective(t, 2);
      if (E.rank() == 0 || E.rank() > 5) continue;
      const int n = static_cast<int>(E.rank());
      const auto A = flag_bundle(E, n);
      // prod_i (1 + t_i u), expanded by hand.
      std::vector<AlgebraElement> prod{AlgebraElement::one(A)};
      for (int i = 0; i < n; ++i) {
        const auto ti = AlgebraElement::variable(A, static_cast<std::size_t>(i));
        std::vector<AlgebraElement> next(prod.size() + 1, AlgebraElement::zero(A));
        for (std::size_t d = 0; d < prod.size(); ++d) {
          next[d] += prod[d];
          next[d + 1] += ti * prod[d];
        }
        prod = std::move(next);
      }
      const auto lam = lambda_series(E, n);
      for (int k = 0; k <= n; ++k)
        CHECK(prod[static_cast<std::size_t>(k)] == AlgebraElement::scalar(A, lam[static_cast<std::size_t>(k)]));
    }
  }
}

TEST_CASE("property: symmetric functions have symmetric normal forms") {
  const auto c2 = catalog_table("C2");
  const GrassmannRing G(2 * regular_rep(c2) + vc(c2, {1, 0}), 3);
  for (const auto& e : G.generators()) CHECK(G.is_symmetric(e));
  CHECK_FALSE(G.is_symmetric(AlgebraElement::variable(G.flag(), 0)));
  for (int trial = 0; trial < 10; ++trial) {
    auto x = AlgebraElement::zero(G.flag());
    for (int term = 0; term < 3; ++term) {
      auto m = AlgebraElement::scalar(G.flag(), kzero::testing::random_virtual(c2, 2));
      for (int f = 0; f < 2; ++f) m = m * G.generator(static_cast<std::size_t>(uniform(0, 3)));
      x += m;
    }
    CHECK(G.is_symmetric(x));
  }
  for (const auto& s : G.schur_basis()) CHECK(G.is_symmetric(s));
}

TEST_CASE("property: Schur elements in boxes up to 3x3 are independent") {
  for (const char* name : {"C1", "C2", "C3"}) {
    const auto t = catalog_table(name);
    for (int n = 1; n <= 6; ++n)
      for (int r = 0; r <= std::min(n, 3); ++r) {
        if (n - r > 3) continue;
        const Int k = n / t->order();
        const auto E = k * regular_rep(t) + (n - k * t->order()) * VirtualCharacter::trivial(t);
        const GrassmannRing G(E, r);
        CAPTURE(n);
        CAPTURE(r);
        CHECK(G.free_rank() == binomial(n, r));
        CHECK(static_cast<Int>(G.schur_basis().size()) == binomial(n, r));
        CHECK(certify_independent(G.schur_basis()));
      }
  }
}

TEST_CASE("independence certificate detects dependence") {
  const auto c2 = catalog_table("C2");
  const GrassmannRing G(2 * regular_rep(c2), 2);
  auto basis = G.schur_basis();
  basis.push_back(basis[1] + vc(c2, {0, 1}) * basis[2]);
  CHECK_FALSE(certify_independent(basis));
  // rho * 1 - (rho) * 1 = 0 is a nontrivial R(G)-relation.
  CHECK(certify_independent({AlgebraElement::one(G.flag())}));
  CHECK_FALSE(certify_independent({AlgebraElement::one(G.flag()), AlgebraElement::scalar(G.flag(), regular_rep(c2))}));
}

TEST_CASE("schur polynomials by tableaux") {
  const auto c1 = catalog_table("C1");
  // s_(1,1)(x1,x2,x3) = e2; s_(2)(x1,x2) = x1^2 + x1 x2 + x2^2.
  const auto s11 = schur_polynomial({1, 1}, 3, c1, 3);
  CHECK(s11.terms().size() == 3);
  const auto s2 = schur_polynomial({2}, 2, c1, 2);
  CHECK(s2.terms().size() == 3);
  CHECK(s2.terms().at(mono({1, 1}))[0] == 1);
  // s_(2,1)(x1,x2,x3) has 8 tableaux, with x1 x2 x3 appearing twice.
  const auto s21 = schur_polynomial({2, 1}, 3, c1, 3);
  CHECK(s21.terms().at(mono({1, 1, 1}))[0] == 2);
  CHECK(schur_polynomial({1, 1, 1}, 2, c1, 2).terms().empty());
  CHECK(box_partitions(2, 2).size() == 6);
  CHECK(box_partitions(0, 4).size() == 1);
}

TEST_CASE("property: flag rings are commutative and associative") {
  const auto s3 = catalog_table("S3");
  const auto A = flag_bundle(regular_rep(s3), 3);
  for (int trial = 0; trial < 5; ++trial) {
    const auto x = random_element(A), y = random_element(A), z = random_element(A);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("property: dense kernels agree with sparse multiplication and rewriting") {
  const auto c2 = catalog_table("C2");
  const auto A = flag_bundle(2 * regular_rep(c2), 3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_element(A), y = random_element(A);
    const auto raw = x.to_polynomial() * y.to_polynomial();
    CHECK(reduce_by_rewriting(raw, A).terms() == (x * y).to_polynomial().terms());
  }
}

TEST_CASE("property: serial and parallel kernels agree") {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  const auto c3 = catalog_table("C3");
  const auto A = flag_bundle(2 * regular_rep(c3), 3);
  for (int trial = 0; trial < 5; ++trial) {
    const auto x = random_element(A), y = random_element(A);
    CHECK(multiply_serial(x, y) == multiply_parallel(x, y));
  }
  const auto P = projective_bundle(vc(c3, {0, 1, 1}));
  const auto x = random_element(P), y = random_element(P);
  CHECK(multiply_serial(x, y) == multiply_parallel(x, y));
  omp_set_num_threads(saved);
}

TEST_CASE("presentations are validated") {
  const auto c2 = catalog_table("C2");
  Polynomial bad(c2, 2);
  bad.add_term(mono({0, 1}), VirtualCharacter::trivial(c2));
  Polynomial ok(c2, 2);
  ok.add_term(mono({0, 0}), VirtualCharacter::trivial(c2));
  CHECK_THROWS(PresentedAlgebra::create(c2, {}, {1, 1}, {bad, ok}));
  Polynomial over(c2, 2);
  over.add_term(mono({2, 0}), VirtualCharacter::trivial(c2));
  CHECK_THROWS(PresentedAlgebra::create(c2, {}, {1, 1}, {over, ok}));
  CHECK_NOTHROW(PresentedAlgebra::create(c2, {}, {1, 1}, {ok, ok}));
  CHECK_THROWS(PresentedAlgebra::create(c2, {}, {1}, {ok, ok}));
}

TEST_CASE("kunneth of presentations") {
  const auto c2 = catalog_table("C2");
  const auto P = projective_bundle(regular_rep(c2));
  const auto K = kunneth(P, P);
  CHECK(K->free_rank() == 4);
  const auto unit = flag_bundle(regular_rep(c2), 0);
  CHECK(kunneth(P, unit)->free_rank() == P->free_rank());
  const auto t = AlgebraElement::variable(P, 0);
  const auto t1 = embed(t, K, 0), t2 = embed(t, K, 1);
  CHECK(embed(t * t, K, 1) == t2 * t2);
  CHECK(t1 * t2 == t2 * t1);
  CHECK_THROWS(kunneth(P, projective_bundle(regular_rep(catalog_table("C3")))));
}

TEST_CASE("algebra and element documents round trip") {
  const auto s3 = catalog_table("S3");
  const auto A = flag_bundle(regular_rep(s3), 2);
  const auto doc = algebra_to_json(*A);
  const auto B = algebra_from_json(nlohmann::json::parse(doc.dump()), s3);
  CHECK(algebra_to_json(*B) == doc);
  CHECK(B->free_rank() == 30);
  const auto x = random_element(A);
  const auto y = element_from_json(element_to_json(x), B);
  CHECK(element_to_json(y) == element_to_json(x));
  CHECK(doc.dump() == algebra_to_json(*flag_bundle(regular_rep(s3), 2)).dump());
}
