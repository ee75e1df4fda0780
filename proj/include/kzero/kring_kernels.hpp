#pragma once

/**
 * @file kring_kernels.hpp
 * @brief Dense kernels for triangular presented algebras over R(G).
 *
 * An algebra with variables t_1..t_r, exponent bounds b_i and triangular
 * rules t_i^(b_i+1) = sum_{j<=b_i} c_j t_i^j (c_j in the algebra on
 * t_1..t_{i-1}) is the tower A_0 = R(G), A_i = A_{i-1}[t_i]/(rule_i).
 * An element of A_i is stored as b_i+1 consecutive blocks, block j being
 * the A_{i-1} coefficient of t_i^j. A_0 blocks are multiplicity vectors.
 *
 * Two product kernels share this layout: a serial recursive one and an
 * OpenMP one that parallelizes the top-level convolution and remainder
 * steps. A sparse term-rewriting reducer is kept as the reference the
 * kernels are tested against.
 */

#include "kzero/rep_ring.hpp"

#include <cstddef>
#include <map>
#include <random>
#include <vector>

namespace kzero {

using Monomial = std::vector<int>;
/// Sparse polynomial coefficients keyed by exponent tuples (lexicographic order).
using SparseTerms = std::map<Monomial, std::vector<Int>>;

namespace kernels {

struct Tower {
  const CharacterTable* table = nullptr;
  std::size_t s = 0;                    // irreducibles = stride of an A_0 block
  std::vector<int> bounds;              // b_1..b_r
  std::vector<std::size_t> level_size;  // monomials in A_i, level_size[0] = 1
  std::vector<std::vector<Int>> rules;  // rules[i-1]: A_i-shaped array for t_i^(b_i+1)
  std::vector<std::size_t> scratch;     // scratch Ints needed by a level-i product

  std::size_t levels() const { return bounds.size(); }
  std::size_t element_size(std::size_t level) const { return level_size[level] * s; }

  /// Recomputes level sizes and scratch requirements from bounds.
  void finalize_layout();
};

/// Dense index of a within-bounds monomial (t_1 fastest).
std::size_t monomial_index(const Tower& tower, const Monomial& m);
Monomial index_monomial(const Tower& tower, std::size_t index);

bool is_zero(const Int* x, std::size_t n);

/// out += x * y in A_level, serial.
void multiply_serial(const Tower& tower, std::size_t level, const Int* x, const Int* y, Int* out);
/// out += x * y in A_level, OpenMP over the top-level blocks.
void multiply_parallel(const Tower& tower, std::size_t level, const Int* x, const Int* y, Int* out);

/// Normal form in A_level of an arbitrary sparse polynomial in t_1..t_level.
std::vector<Int> reduce_dense(const Tower& tower, std::size_t level, const SparseTerms& terms);

enum class RewriteOrder { HighestIndexFirst, Random };

/// Literal rewriting: pick an over-bound variable, replace t_i^(b_i+1) by its rule,
/// collect, repeat. With RewriteOrder::Random the choice of term and variable is
/// drawn from rng. `rules` are sparse rule polynomials, one per variable.
SparseTerms reduce_by_rewriting(const CharacterTable& table, const std::vector<int>& bounds,
                                const std::vector<SparseTerms>& rules, SparseTerms terms,
                                RewriteOrder order = RewriteOrder::HighestIndexFirst, std::mt19937_64* rng = nullptr);

/// Sparse product with exponent addition and no reduction.
SparseTerms multiply_sparse(const CharacterTable& table, const SparseTerms& a, const SparseTerms& b);

}  // namespace kernels
}  // namespace kzero
