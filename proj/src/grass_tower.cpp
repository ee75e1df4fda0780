#include "kzero/grass_tower.hpp"

#include <sstream>
#include <stdexcept>

#include "kzero/kring_io.hpp"

namespace kzero {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Normal form

void validate_triple(const NormalFormTriple& t) {
  if (!t.M.is_effective()) throw std::invalid_argument("normal form: M = " + t.M.to_string() + " is not effective");
  if (t.n < 0) throw std::invalid_argument("normal form: n must be non-negative");
  const Int g = t.M.table()->order();
  if (t.M.rank() != checked_mul(t.n, g))
    throw std::invalid_argument("normal form: rank(M) = " + std::to_string(t.M.rank()) + " differs from n*g = " +
                                std::to_string(t.n * g));
}

VirtualCharacter point_class(const NormalFormTriple& t) {
  validate_triple(t);
  const auto& table = t.M.table();
  return t.M - t.n * regular_rep(table) + t.i * VirtualCharacter::trivial(table);
}

NormalFormTriple normalize(const VirtualCharacter& P, const VirtualCharacter& Q) {
  if (P.table() != Q.table()) throw std::invalid_argument("normalize: P and Q over different tables");
  if (!P.is_effective()) throw std::invalid_argument("normalize: P = " + P.to_string() + " is not effective");
  if (!Q.is_effective()) throw std::invalid_argument("normalize: Q = " + Q.to_string() + " is not effective");
  const auto& table = P.table();
  const Int g = table->order();
  const auto triv = VirtualCharacter::trivial(table);

  const auto emb = embed_in_regular(Q);
  Int n = emb.copies;
  VirtualCharacter M = P + emb.complement;
  Int i = 0;

  const Int r = M.rank() % g;
  if (r > 0) {
    M += (g - r) * triv;
    i -= g - r;
  }
  const Int m = M.rank() / g;
  if (m < n) {
    const Int k = checked_mul(n - m, g);
    M += k * triv;
    i -= k;
  } else if (m > n) {
    const Int k = checked_mul(m - n, g);
    M += k * augmentation_ideal(table);
    n += k;
    i += k;
  }
  NormalFormTriple t{M, n, i};
  validate_triple(t);
  return t;
}

Int minimal_ambient(const NormalFormTriple& t) { return embed_in_regular(t.M).copies; }

RankSplit rank_split(const VirtualCharacter& a) {
  const Int k = a.rank();
  return {k, a - k * VirtualCharacter::trivial(a.table())};
}

json normalize_report(const VirtualCharacter& P, const VirtualCharacter& Q) {
  const auto t = normalize(P, Q);
  const Int g = P.table()->order();
  const bool effective = t.M.is_effective();
  const bool rank_ok = t.M.rank() == t.n * g;
  const bool round_trip = point_class(t) == P - Q;
  return {{"group", P.table()->name()},
          {"input", {{"P", P.mults()}, {"Q", Q.mults()}}},
          {"triple", {{"M", t.M.mults()}, {"n", t.n}, {"i", t.i}}},
          {"minimal_ambient", minimal_ambient(t)},
          {"checks", {{"effective", effective}, {"rank", rank_ok}, {"round_trip", round_trip}}},
          {"verified", effective && rank_ok && round_trip}};
}

// ---------------------------------------------------------------------------
// Tower stages

TowerStage::TowerStage(TablePtr table, int i) : table_(std::move(table)), i_(i), lazy_(std::make_shared<Lazy>()) {
  if (!table_) throw std::invalid_argument("tower stage needs a table");
  if (i < 1) throw std::invalid_argument("tower stage index must be at least 1, got " + std::to_string(i));
}

VirtualCharacter TowerStage::ambient() const { return (2 * i_) * regular_rep(table_); }

Int TowerStage::subspace_rank() const { return checked_mul(i_, table_->order()); }

const GrassmannRing& TowerStage::ring() const {
  std::call_once(lazy_->once, [this] {
    lazy_->ring = std::make_unique<GrassmannRing>(ambient(), static_cast<int>(subspace_rank()));
  });
  return *lazy_->ring;
}

LineDecomposition TowerStage::tautological() const {
  return {VirtualCharacter::zero(table_), std::vector<Int>(static_cast<std::size_t>(subspace_rank()), 1)};
}

GeneratorPolynomial generator_variable(const TowerStage& stage, std::size_t j) {
  const auto R = static_cast<std::size_t>(stage.subspace_rank());
  if (j > R) throw std::out_of_range("generator index out of range");
  if (j == 0) return Polynomial::constant(VirtualCharacter::trivial(stage.table()), R);
  return Polynomial::variable(stage.table(), R, j - 1);
}

namespace {

AlgebraElement evaluate(const GeneratorPolynomial& p, const AlgebraPtr& algebra,
                        const std::vector<AlgebraElement>& gens) {
  if (p.num_vars() + 1 != gens.size()) throw std::invalid_argument("generator polynomial has the wrong arity");
  auto out = AlgebraElement::zero(algebra);
  for (const auto& [m, c] : p.terms()) {
    auto term = AlgebraElement::scalar(algebra, VirtualCharacter(algebra->base(), c));
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[j] > 0) term = term * gens[j + 1].pow(static_cast<unsigned>(m[j]));
    out += term;
  }
  return out;
}

}  // namespace

AlgebraElement evaluate_in_stage(const GeneratorPolynomial& p, const TowerStage& stage) {
  const auto& ring = stage.ring();
  return evaluate(p, ring.flag(), ring.generators());
}

RestrictionMap::RestrictionMap(const TowerStage& source, const TowerStage& target)
    : source_index_(source.index()), target_(target) {
  if (source.table() != target.table()) throw std::invalid_argument("restriction: stages over different tables");
  if (source.index() != target.index() + 1)
    throw std::invalid_argument("restriction: stage mismatch (" + std::to_string(source.index()) + " -> " +
                                std::to_string(target.index()) + ")");
  auto shifted = target.tautological();
  shifted.base = regular_rep(target.table());
  images_ = lambda_series_of_class(source.subspace_rank(), shifted, target.ring().flag());
}

AlgebraElement RestrictionMap::apply(const GeneratorPolynomial& p) const {
  return evaluate(p, target_.ring().flag(), images_);
}

RestrictionMap restriction(const TowerStage& source, const TowerStage& target) {
  return RestrictionMap(source, target);
}

std::vector<GeneratorPolynomial> source_relations(const TowerStage& source, int count) {
  const auto R = static_cast<std::size_t>(source.subspace_rank());
  const Int n = source.ambient_rank();
  const Int top = n - static_cast<Int>(R) + count;
  const auto& table = source.table();
  // Inverse series of lambda_u(U) = 1 + sum_j x_j u^j.
  std::vector<Polynomial> inv{Polynomial::constant(VirtualCharacter::trivial(table), R)};
  for (Int m = 1; m <= top; ++m) {
    Polynomial c(table, R);
    for (Int p = 1; p <= std::min<Int>(m, static_cast<Int>(R)); ++p) {
      auto term = generator_variable(source, static_cast<std::size_t>(p)) * inv[static_cast<std::size_t>(m - p)];
      for (const auto& [mono, coef] : term.terms()) {
        std::vector<Int> neg(coef.size());
        for (std::size_t q = 0; q < coef.size(); ++q) neg[q] = checked_mul(-1, coef[q]);
        c.add_term(mono, neg);
      }
    }
    inv.push_back(std::move(c));
  }
  const auto lamE = lambda_series(source.ambient(), top);
  std::vector<GeneratorPolynomial> out;
  for (Int k = n - static_cast<Int>(R) + 1; k <= top; ++k) {
    Polynomial rel(table, R);
    for (Int a = 0; a <= k; ++a)
      rel += Polynomial::constant(lamE[static_cast<std::size_t>(a)], R) * inv[static_cast<std::size_t>(k - a)];
    out.push_back(std::move(rel));
  }
  return out;
}

std::vector<WitnessEntry> surjectivity_witness(const TowerStage& source, const TowerStage& target) {
  const auto f = restriction(source, target);
  const auto& table = target.table();
  const Int J = target.subspace_rank();
  // c_0 = 1, c_m = -sum_{p=1}^m lambda^p(rho) c_{m-p}.
  const auto lamRho = lambda_series(regular_rep(table), J);
  std::vector<VirtualCharacter> c{VirtualCharacter::trivial(table)};
  for (Int m = 1; m <= J; ++m) {
    auto cm = VirtualCharacter::zero(table);
    for (Int p = 1; p <= m; ++p) cm -= lamRho[static_cast<std::size_t>(p)] * c[static_cast<std::size_t>(m - p)];
    c.push_back(cm);
  }
  const auto& expected = target.ring().generators();
  std::vector<WitnessEntry> out;
  for (Int j = 0; j <= J; ++j) {
    const auto R = static_cast<std::size_t>(source.subspace_rank());
    Polynomial expr(table, R);
    for (Int a = 0; a <= j; ++a)
      expr += Polynomial::constant(c[static_cast<std::size_t>(j - a)], R) *
              generator_variable(source, static_cast<std::size_t>(a));
    auto value = f.apply(expr);
    const bool ok = value == expected[static_cast<std::size_t>(j)];
    out.push_back(WitnessEntry{j, std::move(expr), std::move(value), ok});
  }
  return out;
}

std::string generator_polynomial_to_string(const GeneratorPolynomial& p) {
  if (p.terms().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << VirtualCharacter(p.table(), c).to_string() << ')';
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[j] == 0) continue;
      os << "*L" << j + 1;
      if (m[j] > 1) os << '^' << m[j];
    }
  }
  return os.str();
}

json witness_report(const TowerStage& source, const TowerStage& target, const std::vector<WitnessEntry>& entries) {
  json list = json::array();
  bool all = true;
  for (const auto& e : entries) {
    all = all && e.certified;
    list.push_back({{"j", e.j},
                    {"expression", generator_polynomial_to_string(e.expression)},
                    {"value", element_to_json(e.value)},
                    {"certified", e.certified}});
  }
  return {{"group", source.table()->name()},
          {"source_stage", source.index()},
          {"target_stage", target.index()},
          {"witnesses", list},
          {"all_certified", all}};
}

}  // namespace kzero
