#pragma once

/**
 * @file grass_tower.hpp
 * @brief The tower Gr(ig, 2i rho), its restriction maps, and the K0 normal form.
 *
 * A class P - Q of R(G) is rewritten as [M] - n[rho] + i[triv] with M
 * effective of rank n*g. Tower stage i is the Grassmann ring of ig-planes in
 * 2i copies of rho; the restriction from stage i+1 to stage i sends
 * lambda^j of the tautological class U to lambda^j(U + rho).
 */

#include "kzero/kring.hpp"

#include <json.hpp>

#include <memory>
#include <mutex>
#include <utility>

namespace kzero {

// ---------------------------------------------------------------------------
// Normal form

struct NormalFormTriple {
  VirtualCharacter M;
  Int n = 0;
  Int i = 0;
};

/// Throws std::invalid_argument naming the violated invariant.
void validate_triple(const NormalFormTriple& t);
/// M - n rho + i triv.
VirtualCharacter point_class(const NormalFormTriple& t);
/// Normal form of P - Q for effective P, Q over the same table.
NormalFormTriple normalize(const VirtualCharacter& P, const VirtualCharacter& Q);
/// Smallest n' with M a summand of n' copies of rho.
Int minimal_ambient(const NormalFormTriple& t);

struct RankSplit {
  Int rank = 0;
  VirtualCharacter reduced;  // rank 0
};
RankSplit rank_split(const VirtualCharacter& a);

nlohmann::json normalize_report(const VirtualCharacter& P, const VirtualCharacter& Q);

// ---------------------------------------------------------------------------
// Tower stages

class TowerStage {
 public:
  /// Stage i >= 1; the Grassmann ring itself is built on first use.
  TowerStage(TablePtr table, int i);

  int index() const { return i_; }
  const TablePtr& table() const { return table_; }
  /// 2i copies of rho.
  VirtualCharacter ambient() const;
  /// Rank i*g of the tautological subbundle.
  Int subspace_rank() const;
  Int ambient_rank() const { return 2 * subspace_rank(); }
  /// C(2ig, ig), known without building the ring.
  Int free_rank() const { return binomial(ambient_rank(), subspace_rank()); }
  /// Admissible integer coordinates of normal-form triples at this stage.
  std::pair<Int, Int> interval() const { return {-i_, i_}; }

  const GrassmannRing& ring() const;
  LineDecomposition tautological() const;

 private:
  struct Lazy {
    std::once_flag once;
    std::unique_ptr<GrassmannRing> ring;
  };
  TablePtr table_;
  int i_;
  std::shared_ptr<Lazy> lazy_;
};

/// Polynomials in the source generators lambda^1..lambda^R of a stage
/// (variable j-1 stands for lambda^j).
using GeneratorPolynomial = Polynomial;

GeneratorPolynomial generator_variable(const TowerStage& stage, std::size_t j);

/// Evaluates a generator polynomial in the stage's own ring.
AlgebraElement evaluate_in_stage(const GeneratorPolynomial& p, const TowerStage& stage);

class RestrictionMap {
 public:
  RestrictionMap(const TowerStage& source, const TowerStage& target);

  int source_index() const { return source_index_; }
  int target_index() const { return target_.index(); }
  /// Image of lambda^j of the source tautological class, j = 0..R.
  const AlgebraElement& image(std::size_t j) const { return images_.at(j); }
  const std::vector<AlgebraElement>& images() const { return images_; }
  std::size_t source_generators() const { return images_.size() - 1; }

  AlgebraElement apply(const GeneratorPolynomial& p) const;

 private:
  int source_index_;
  TowerStage target_;
  std::vector<AlgebraElement> images_;
};

RestrictionMap restriction(const TowerStage& source, const TowerStage& target);

/// lambda^k(E - U) in the source generators for k = n-r+1 .. n-r+count; these
/// vanish in the source ring.
std::vector<GeneratorPolynomial> source_relations(const TowerStage& source, int count);

struct WitnessEntry {
  Int j = 0;
  GeneratorPolynomial expression;  // in source generators
  AlgebraElement value;            // its image in the target
  bool certified = false;          // value equals lambda^j of the target tautological class
};

/// For each target generator lambda^j, the preimage sum_a c_(j-a) lambda^a with
/// sum_m c_m u^m the inverse series of lambda_u(rho).
std::vector<WitnessEntry> surjectivity_witness(const TowerStage& source, const TowerStage& target);

nlohmann::json witness_report(const TowerStage& source, const TowerStage& target,
                              const std::vector<WitnessEntry>& entries);

std::string generator_polynomial_to_string(const GeneratorPolynomial& p);

}  // namespace kzero
