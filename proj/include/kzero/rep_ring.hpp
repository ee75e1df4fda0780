#pragma once

/**
 * @file rep_ring.hpp
 * @brief Character tables and the representation ring R(G) = K0(G, pt).
 *
 * A CharacterTable is validated exactly on construction (row and column
 * orthogonality, degree sum, power-map coherence). Virtual characters are
 * integer multiplicity vectors over the irreducibles; ring operations use
 * structure constants precomputed from pointwise products of characters.
 */

#include "kzero/exact_arith.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace kzero {

/// Raised when a character table (or a class function) violates a defining relation.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string relation, const std::string& detail)
      : std::runtime_error(relation + ": " + detail), relation_(std::move(relation)) {}
  /// Short identifier of the violated relation, e.g. "row orthogonality".
  const std::string& relation() const { return relation_; }

 private:
  std::string relation_;
};

struct ConjugacyClass {
  std::string label;
  Int size = 0;
};

struct FiniteGroupData {
  std::string name;
  Int order = 0;
  int exponent = 1;
  std::vector<ConjugacyClass> classes;
  /// power_map[c][k] is the class of g^k for g in class c, 0 <= k < exponent.
  std::vector<std::vector<int>> power_map;

  std::size_t num_classes() const { return classes.size(); }
  int power_class(std::size_t c, Int k) const {
    return power_map[c][static_cast<std::size_t>(mod_floor(k, exponent))];
  }
};

class CharacterTable;
using TablePtr = std::shared_ptr<const CharacterTable>;
using ClassFunction = std::vector<CyclotomicInteger>;

class CharacterTable {
 public:
  /// Validates every table invariant and precomputes ring data.
  static TablePtr create(FiniteGroupData group, std::vector<std::vector<CyclotomicInteger>> rows,
                         std::vector<Int> degrees, std::vector<std::string> names = {});

  const FiniteGroupData& group() const { return group_; }
  const std::string& name() const { return group_.name; }
  Int order() const { return group_.order; }
  int exponent() const { return group_.exponent; }
  std::size_t size() const { return rows_.size(); }
  std::size_t num_classes() const { return group_.classes.size(); }
  Int class_size(std::size_t c) const { return group_.classes[c].size; }

  const CyclotomicInteger& value(std::size_t irr, std::size_t cls) const { return rows_[irr][cls]; }
  const std::vector<std::vector<CyclotomicInteger>>& rows() const { return rows_; }
  const std::vector<Int>& degrees() const { return degrees_; }
  Int degree(std::size_t irr) const { return degrees_[irr]; }
  std::size_t trivial_index() const { return trivial_; }
  const std::vector<std::string>& names() const { return names_; }
  /// Name of irreducible i; falls back to "chi<i>".
  std::string irreducible_name(std::size_t i) const;

  /// Orthogonality decomposition of a class function into multiplicities.
  std::vector<Int> decompose_values(const ClassFunction& values) const;
  /// Exact inner product (1/g) sum_c |c| f(c) conj(h(c)), which must be rational.
  Rational inner_product(const ClassFunction& f, const ClassFunction& h) const;

  /// out += a * b in multiplicity coordinates (structure constants).
  void multiply_accumulate(const Int* a, const Int* b, Int* out) const;
  /// out += c * a * b.
  void multiply_accumulate_scaled(Int c, const Int* a, const Int* b, Int* out) const;

  /// Multiplicities of psi^k(chi_i), k taken mod exponent.
  const std::vector<Int>& adams_of_irreducible(Int k, std::size_t i) const;
  /// Index of the dual of irreducible i.
  std::size_t dual_index(std::size_t i) const { return dual_[i]; }

  struct StructureConstant {
    std::uint32_t i, j, k;
    Int n;
  };
  const std::vector<StructureConstant>& structure_constants() const { return structure_; }

 private:
  CharacterTable() = default;
  void validate() const;
  void precompute();

  FiniteGroupData group_;
  std::vector<std::vector<CyclotomicInteger>> rows_;
  std::vector<Int> degrees_;
  std::vector<std::string> names_;
  std::size_t trivial_ = 0;
  std::vector<StructureConstant> structure_;
  // structure_begin_[i] is the first entry with first index i.
  std::vector<std::size_t> structure_begin_;
  std::vector<std::vector<std::vector<Int>>> adams_;  // [k][i] -> mults
  std::vector<std::size_t> dual_;
};

/// Element of R(G): integer multiplicities over the irreducibles of a table.
class VirtualCharacter {
 public:
  VirtualCharacter(TablePtr table, std::vector<Int> mults);
  static VirtualCharacter zero(TablePtr table);
  static VirtualCharacter trivial(TablePtr table);
  static VirtualCharacter irreducible(TablePtr table, std::size_t i);

  const TablePtr& table() const { return table_; }
  const std::vector<Int>& mults() const { return mults_; }
  Int operator[](std::size_t i) const { return mults_[i]; }

  Int rank() const;
  bool is_effective() const;
  bool is_zero() const;
  ClassFunction values() const;

  VirtualCharacter& operator+=(const VirtualCharacter& o);
  VirtualCharacter& operator-=(const VirtualCharacter& o);
  VirtualCharacter operator-() const;
  friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
  friend VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) { return a -= b; }
  friend VirtualCharacter operator*(Int c, const VirtualCharacter& a);
  friend VirtualCharacter operator*(const VirtualCharacter& a, const VirtualCharacter& b);
  friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b);

  /// e.g. "triv+sgn+2std", "0".
  std::string to_string() const;
  /// Comma separated multiplicities, e.g. "1,1,2".
  std::string to_csv() const;

 private:
  void require_same_table(const VirtualCharacter& o) const;

  TablePtr table_;
  std::vector<Int> mults_;
};

VirtualCharacter decompose(const TablePtr& table, const ClassFunction& values);
VirtualCharacter product(const VirtualCharacter& a, const VirtualCharacter& b);
/// Pointwise product followed by decomposition; reference path for product().
VirtualCharacter product_via_values(const VirtualCharacter& a, const VirtualCharacter& b);
VirtualCharacter adams(Int k, const VirtualCharacter& a);
/// Adams operation computed directly from the power map on class values.
VirtualCharacter adams_via_values(Int k, const VirtualCharacter& a);
VirtualCharacter lambda_op(Int k, const VirtualCharacter& a);
/// lambda^0..lambda^max_k by the Newton recursion.
std::vector<VirtualCharacter> lambda_series(const VirtualCharacter& a, Int max_k);
VirtualCharacter dual(const VirtualCharacter& a);
VirtualCharacter regular_rep(const TablePtr& table);
VirtualCharacter augmentation_ideal(const TablePtr& table);

struct RegularEmbedding {
  Int copies = 0;  // n with a a summand of n copies of rho
  VirtualCharacter complement;
};
RegularEmbedding embed_in_regular(const VirtualCharacter& a);

/// Parses a comma separated multiplicity vector for the given table.
VirtualCharacter parse_class_vector(const TablePtr& table, const std::string& csv);

}  // namespace kzero
