#pragma once

/**
 * @file kring.hpp
 * @brief K0 of projective bundles, flag bundles and Grassmannians over R(G).
 *
 * Every algebra here is a free R(G)-module presented by triangular rules:
 * the rule for t_i rewrites t_i^(b_i+1) in terms of t_1..t_i with
 * exponents inside the bounds, so the monomials t^a with 0 <= a_i <= b_i
 * are a basis and every element has a unique normal form.
 *
 * For a rank n class E, the flag algebra uses t_i = [F_i] - [F_{i-1}];
 * the rule for t_i is the theta relation of the quotient class
 * E - t_1 - ... - t_{i-1}, and the bounds are b_i = n - i. Grassmann rings
 * are the symmetric subrings generated by the elementary symmetric
 * polynomials e_i(t_1..t_r), with Schur elements of the r x (n-r) box as
 * the certified free basis.
 */

#include "kzero/kring_kernels.hpp"
#include "kzero/rep_ring.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace kzero {

class PresentedAlgebra;
using AlgebraPtr = std::shared_ptr<const PresentedAlgebra>;

/// Polynomial in t_1..t_r with R(G) coefficients and no bounds imposed.
class Polynomial {
 public:
  Polynomial(TablePtr table, std::size_t num_vars);
  static Polynomial constant(const VirtualCharacter& c, std::size_t num_vars);
  static Polynomial variable(TablePtr table, std::size_t num_vars, std::size_t var);

  const TablePtr& table() const { return table_; }
  std::size_t num_vars() const { return num_vars_; }
  const SparseTerms& terms() const { return terms_; }

  void add_term(const Monomial& m, const VirtualCharacter& c);
  void add_term(const Monomial& m, const std::vector<Int>& c);

  Polynomial& operator+=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

 private:
  TablePtr table_;
  std::size_t num_vars_;
  SparseTerms terms_;
};

struct Provenance {
  std::string kind;                         // "pbundle", "flag", "kunneth", "custom"
  std::optional<VirtualCharacter> ambient;  // E for bundle constructions
  int r = 0;                                // flag length
  std::string note;
};

class PresentedAlgebra {
 public:
  /// Validates bounds and triangularity of the rules.
  /// rules[i] expresses t_i^(bounds[i]+1) using t_1..t_i within bounds.
  static AlgebraPtr create(TablePtr base, std::vector<std::string> var_names, std::vector<int> bounds,
                           std::vector<Polynomial> rules, Provenance provenance = {});

  const TablePtr& base() const { return base_; }
  std::size_t num_vars() const { return bounds_.size(); }
  const std::vector<std::string>& var_names() const { return names_; }
  const std::vector<int>& bounds() const { return bounds_; }
  const std::vector<Polynomial>& rules() const { return rules_; }
  const Provenance& provenance() const { return provenance_; }
  const kernels::Tower& tower() const { return tower_; }

  /// prod (b_i + 1).
  Int free_rank() const;
  /// Basis monomials in dense-index order.
  std::vector<Monomial> basis() const;

 private:
  PresentedAlgebra() = default;
  TablePtr base_;
  std::vector<std::string> names_;
  std::vector<int> bounds_;
  std::vector<Polynomial> rules_;
  Provenance provenance_;
  kernels::Tower tower_;
};

/// Normal-form element of a presented algebra.
class AlgebraElement {
 public:
  static AlgebraElement zero(AlgebraPtr algebra);
  static AlgebraElement one(AlgebraPtr algebra);
  static AlgebraElement scalar(AlgebraPtr algebra, const VirtualCharacter& c);
  /// The generator t_{var+1} (var is 0-based), reduced.
  static AlgebraElement variable(AlgebraPtr algebra, std::size_t var);
  AlgebraElement(AlgebraPtr algebra, std::vector<Int> dense);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Int>& dense() const { return data_; }

  bool is_zero() const;
  VirtualCharacter coefficient(const Monomial& m) const;
  /// Nonzero terms, lexicographic in the exponent tuple.
  std::vector<std::pair<Monomial, VirtualCharacter>> terms() const;
  Polynomial to_polynomial() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement operator-() const;
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const VirtualCharacter& c, const AlgebraElement& a);
  friend AlgebraElement operator*(Int c, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  AlgebraElement pow(unsigned k) const;

  std::string to_string() const;

 private:
  AlgebraPtr algebra_;
  std::vector<Int> data_;
};

/// Product through the serial kernel (the default operator* picks by size).
AlgebraElement multiply_serial(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement multiply_parallel(const AlgebraElement& a, const AlgebraElement& b);

/// Normal form of an arbitrary polynomial (top variable eliminated first).
AlgebraElement reduce(const Polynomial& x, const AlgebraPtr& algebra);
/// Reference normal form by literal term rewriting.
Polynomial reduce_by_rewriting(const Polynomial& x, const AlgebraPtr& algebra,
                               kernels::RewriteOrder order = kernels::RewriteOrder::HighestIndexFirst,
                               std::mt19937_64* rng = nullptr);

/// theta_i = (-1)^i lambda^(n-i)(E), i = 0..n.
std::vector<VirtualCharacter> theta_polynomial(const VirtualCharacter& E);

AlgebraPtr projective_bundle(const VirtualCharacter& E);
AlgebraPtr flag_bundle(const VirtualCharacter& E, int r);

/// Class of the form base + sum_j n_j t_j.
struct LineDecomposition {
  VirtualCharacter base;
  std::vector<Int> lines;  // coefficient of t_j, one per variable
};
/// Reads an element of the form scalar + sum of integer multiples of the t_j;
/// throws otherwise.
LineDecomposition line_decomposition(const AlgebraElement& x);

/// lambda^0..lambda^max_k of a line-decomposed class, via
/// lambda_u(base) * prod (1 + t_j u)^(n_j).
std::vector<AlgebraElement> lambda_series_of_class(Int max_k, const LineDecomposition& x, const AlgebraPtr& algebra);
AlgebraElement lambda_of_class(Int k, const LineDecomposition& x, const AlgebraPtr& algebra);
AlgebraElement lambda_of_class(Int k, const AlgebraElement& x);

/// Variables permuted (perm[i] = new position of t_i), then reduced.
AlgebraElement permute_variables(const AlgebraElement& x, const std::vector<std::size_t>& perm);

/// Partitions with at most `rows` parts, each at most `cols`.
std::vector<std::vector<int>> box_partitions(int rows, int cols);
/// Schur polynomial s_lambda(t_1..t_r) by semistandard tableaux.
Polynomial schur_polynomial(const std::vector<int>& partition, std::size_t r, const TablePtr& table,
                            std::size_t num_vars, std::size_t var_offset = 0);

/// Certifies R(G)-linear independence: at every class c the evaluated
/// coefficient vectors are linearly independent over F_p with p = 1 mod e
/// (full rank mod p implies full rank over Q(zeta_e), hence independence).
bool certify_independent(const std::vector<AlgebraElement>& elements);

class GrassmannRing {
 public:
  GrassmannRing(const VirtualCharacter& E, int r);

  const AlgebraPtr& flag() const { return flag_; }
  const VirtualCharacter& ambient() const { return ambient_; }
  int r() const { return r_; }
  Int n() const { return n_; }
  /// e_i(t_1..t_r), the image of lambda^i of the tautological subbundle; i = 0..r.
  const AlgebraElement& generator(std::size_t i) const { return generators_.at(i); }
  const std::vector<AlgebraElement>& generators() const { return generators_; }
  /// Tautological class t_1 + ... + t_r as a line decomposition.
  LineDecomposition tautological() const;

  std::vector<std::vector<int>> basis_partitions() const { return box_partitions(r_, static_cast<int>(n_) - r_); }
  AlgebraElement schur(const std::vector<int>& partition) const;
  std::vector<AlgebraElement> schur_basis() const;
  /// Count of r x (n-r) box partitions, C(n, r).
  Int free_rank() const;

  /// Invariance of the normal form under adjacent transpositions of t_1..t_r.
  bool is_symmetric(const AlgebraElement& x) const;

 private:
  VirtualCharacter ambient_;
  int r_;
  Int n_;
  AlgebraPtr flag_;
  std::vector<AlgebraElement> generators_;
};

Int free_rank(const PresentedAlgebra& a);
Int free_rank(const GrassmannRing& g);

Int binomial(Int n, Int k);
Int falling_factorial(Int n, Int k);

/// Tensor product of presentations over R(G): variables concatenated.
AlgebraPtr kunneth(const AlgebraPtr& a, const AlgebraPtr& b);
/// Element of `a` re-read in a larger algebra whose variables from
/// var_offset on carry the same names, bounds and rules.
AlgebraElement embed(const AlgebraElement& x, const AlgebraPtr& target, std::size_t var_offset);

/// Tensor product of two Grassmann rings: the combined flag presentation with
/// the product Schur basis s_lambda(t) s_mu(t').
struct GrassmannProduct {
  AlgebraPtr algebra;
  std::vector<AlgebraElement> basis;
  Int free_rank() const { return static_cast<Int>(basis.size()); }
};
GrassmannProduct kunneth(const GrassmannRing& a, const GrassmannRing& b);

}  // namespace kzero
