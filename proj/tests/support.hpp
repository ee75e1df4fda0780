#pragma once

// Hand-rolled generators for the property tests.

#include "kzero/catalog.hpp"
#include "kzero/exact_arith.hpp"
#include "kzero/matrix_rep.hpp"
#include "kzero/rep_ring.hpp"

#include <complex>
#include <optional>
#include <numbers>
#include <random>

namespace kzero::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261014);
  return gen;
}

inline Int uniform(Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng()); }

inline CyclotomicInteger random_cyclotomic(int e, Int bound = 5) {
  std::vector<Int> c(static_cast<std::size_t>(e));
  for (auto& v : c) v = uniform(-bound, bound);
  return CyclotomicInteger(e, c);
}

inline VirtualCharacter random_virtual(const TablePtr& t, Int bound = 3) {
  std::vector<Int> m(t->size());
  for (auto& v : m) v = uniform(-bound, bound);
  return VirtualCharacter(t, m);
}

inline VirtualCharacter random_effective(const TablePtr& t, Int bound = 4) {
  std::vector<Int> m(t->size());
  for (auto& v : m) v = uniform(0, bound);
  return VirtualCharacter(t, m);
}

/// Evaluation at exp(2 pi i / e): independent complex oracle for canonical forms.
inline std::complex<double> evaluate(const CyclotomicInteger& a) {
  const auto e = a.order();
  std::complex<double> z = 0;
  for (int k = 0; k < e; ++k)
    z += static_cast<double>(a.coeffs()[static_cast<std::size_t>(k)]) *
         std::polar(1.0, 2 * std::numbers::pi * k / e);
  return z;
}

inline RationalMatrix random_invertible(std::size_t n) {
  while (true) {
    std::vector<Int> e(n * n);
    for (auto& v : e) v = uniform(-3, 3);
    auto m = RationalMatrix::from_ints(n, n, e);
    if (m.determinant() != 0) return m;
  }
}

/// An equivariant surjection phi: L -> M between S3 representations hidden by
/// random changes of basis, with a section s that is generally not equivariant.
struct SplittingInstance {
  MatrixRepresentation L, M;
  RationalMatrix phi, s;
};

inline SplittingInstance random_splitting_instance(const GroupElementsPtr& s3, std::size_t max_dim = 6) {
  const MatrixRepresentation blocks[] = {trivial_matrix_rep(s3), sign_matrix_rep(s3), standard_matrix_rep(s3)};
  std::vector<int> chosen;
  std::size_t dim = 0;
  while (true) {
    const auto b = static_cast<int>(uniform(0, 2));
    const std::size_t d = blocks[b].dimension();
    if (dim + d > max_dim) break;
    chosen.push_back(b);
    dim += d;
    if (uniform(0, 3) == 0) break;
  }
  // Keep a nonempty subset of the blocks as the quotient.
  std::vector<bool> keep(chosen.size());
  bool any = false;
  for (std::size_t i = 0; i < chosen.size(); ++i) any |= (keep[i] = uniform(0, 1) == 1);
  if (!any) keep[static_cast<std::size_t>(uniform(0, static_cast<Int>(chosen.size()) - 1))] = true;

  auto D = blocks[chosen[0]];
  for (std::size_t i = 1; i < chosen.size(); ++i) D = direct_sum(D, blocks[chosen[i]]);
  std::optional<MatrixRepresentation> Dsub;
  std::vector<std::size_t> kept_coords, dropped_coords;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    const std::size_t d = blocks[chosen[i]].dimension();
    for (std::size_t k = 0; k < d; ++k) (keep[i] ? kept_coords : dropped_coords).push_back(offset + k);
    if (keep[i]) Dsub = Dsub ? direct_sum(*Dsub, blocks[chosen[i]]) : blocks[chosen[i]];
    offset += d;
  }
  const std::size_t dm = kept_coords.size();
  RationalMatrix proj(dm, dim), lift(dim, dm);
  for (std::size_t r = 0; r < dm; ++r) {
    proj(r, kept_coords[r]) = 1;
    lift(kept_coords[r], r) = 1;
    for (auto c : dropped_coords) lift(c, r) = uniform(-2, 2);  // lands in the kernel part
  }
  const auto P = random_invertible(dim);
  const auto Q = random_invertible(dm);
  return {conjugate(D, P), conjugate(*Dsub, Q), Q * proj * P.inverse(), P * lift * Q.inverse()};
}

}  // namespace kzero::testing
