#pragma once

/**
 * @file matrix_rep.hpp
 * @brief Explicit rational matrix representations of small finite groups.
 *
 * Holds the element-level data that character tables abstract away: a
 * multiplication table, inverses, and the catalog class of each element.
 * Used for the equivariant splitting average and for the brute-force
 * exterior-power characters that check lambda_op.
 */

#include "kzero/rep_ring.hpp"

#include <memory>
#include <vector>

namespace kzero {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_ints(std::size_t rows, std::size_t cols, const std::vector<Int>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix scaled(const Rational& q) const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

  Rational trace() const;
  Rational determinant() const;
  /// Throws if singular.
  RationalMatrix inverse() const;
  Int rank() const;

  /// Matrix on the k-th exterior power, basis = increasing k-subsets in lexicographic order.
  RationalMatrix compound(std::size_t k) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Elements of a finite group realized as permutations, with class labels
/// matching a catalog character table.
struct GroupElements {
  std::string name;
  std::vector<std::vector<int>> perms;  // element -> permutation of {0..degree-1}
  std::vector<std::vector<int>> mult;   // mult[a][b] = index of a*b (apply b first, then a)
  std::vector<int> inverse;
  int identity = 0;
  std::vector<int> class_of;            // catalog class index per element

  std::size_t order() const { return perms.size(); }
};
using GroupElementsPtr = std::shared_ptr<const GroupElements>;

/// Concrete permutation realizations for C1..C12, S3 and S4.
GroupElementsPtr concrete_group(const std::string& name);

class MatrixRepresentation {
 public:
  /// Validates that the matrices obey the group law.
  MatrixRepresentation(GroupElementsPtr group, std::vector<RationalMatrix> matrices);

  const GroupElementsPtr& group() const { return group_; }
  std::size_t dimension() const { return dim_; }
  const RationalMatrix& operator()(std::size_t element) const { return mats_[element]; }
  const std::vector<RationalMatrix>& matrices() const { return mats_; }

  /// Character as a class function of the matching catalog table.
  ClassFunction character(const CharacterTable& table) const;

 private:
  GroupElementsPtr group_;
  std::size_t dim_ = 0;
  std::vector<RationalMatrix> mats_;
};

MatrixRepresentation regular_permutation_rep(const GroupElementsPtr& group);
MatrixRepresentation natural_permutation_rep(const GroupElementsPtr& group);
MatrixRepresentation trivial_matrix_rep(const GroupElementsPtr& group, std::size_t dim = 1);
/// g -> sign of the permutation g.
MatrixRepresentation sign_matrix_rep(const GroupElementsPtr& group);
/// Natural permutation representation restricted to the sum-zero subspace.
MatrixRepresentation standard_matrix_rep(const GroupElementsPtr& group);
MatrixRepresentation direct_sum(const MatrixRepresentation& a, const MatrixRepresentation& b);
/// g -> P rep(g) P^-1.
MatrixRepresentation conjugate(const MatrixRepresentation& rep, const RationalMatrix& change_of_basis);

/// Averages a linear section s of the equivariant surjection phi: L -> M into
/// an equivariant one, (1/|G|) sum_g L(g) s M(g)^-1. Checks both hypotheses.
RationalMatrix equivariant_splitting(const MatrixRepresentation& source, const MatrixRepresentation& target,
                                     const RationalMatrix& phi, const RationalMatrix& section);

/// Character of the k-th exterior power, by traces of compound matrices.
ClassFunction exterior_power_oracle(const MatrixRepresentation& rep, std::size_t k, const CharacterTable& table);

}  // namespace kzero
