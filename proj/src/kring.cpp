#include "kzero/kring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <omp.h>

namespace kzero {

using kernels::Tower;

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(TablePtr table, std::size_t num_vars) : table_(std::move(table)), num_vars_(num_vars) {
  if (!table_) throw std::invalid_argument("polynomial needs a character table");
}

Polynomial Polynomial::constant(const VirtualCharacter& c, std::size_t num_vars) {
  Polynomial p(c.table(), num_vars);
  p.add_term(Monomial(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(TablePtr table, std::size_t num_vars, std::size_t var) {
  if (var >= num_vars) throw std::out_of_range("variable index out of range");
  Polynomial p(table, num_vars);
  Monomial m(num_vars, 0);
  m[var] = 1;
  p.add_term(m, VirtualCharacter::trivial(table));
  return p;
}

void Polynomial::add_term(const Monomial& m, const VirtualCharacter& c) {
  if (c.table() != table_) throw std::invalid_argument("polynomial coefficient over a different table");
  add_term(m, c.mults());
}

void Polynomial::add_term(const Monomial& m, const std::vector<Int>& c) {
  if (m.size() != num_vars_) throw std::invalid_argument("monomial has the wrong number of exponents");
  if (c.size() != table_->size()) throw std::invalid_argument("coefficient has the wrong length");
  if (std::any_of(m.begin(), m.end(), [](int a) { return a < 0; }))
    throw std::invalid_argument("negative exponent");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted)
    for (std::size_t i = 0; i < c.size(); ++i) it->second[i] = checked_add(it->second[i], c[i]);
  if (kernels::is_zero(it->second.data(), it->second.size())) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.table_ != table_ || o.num_vars_ != num_vars_) throw std::invalid_argument("polynomial shape mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.table_ != b.table_ || a.num_vars_ != b.num_vars_) throw std::invalid_argument("polynomial shape mismatch");
  Polynomial out(a.table_, a.num_vars_);
  out.terms_ = kernels::multiply_sparse(*a.table_, a.terms_, b.terms_);
  return out;
}

// ---------------------------------------------------------------------------
// PresentedAlgebra

AlgebraPtr PresentedAlgebra::create(TablePtr base, std::vector<std::string> var_names, std::vector<int> bounds,
                                    std::vector<Polynomial> rules, Provenance provenance) {
  if (!base) throw std::invalid_argument("presented algebra needs a base table");
  const std::size_t r = bounds.size();
  if (var_names.empty())
    for (std::size_t i = 0; i < r; ++i) var_names.push_back("t" + std::to_string(i + 1));
  if (var_names.size() != r) throw std::invalid_argument("one name per variable required");
  if (rules.size() != r) throw std::invalid_argument("one rewriting rule per variable required");

  std::shared_ptr<PresentedAlgebra> a(new PresentedAlgebra());
  a->base_ = std::move(base);
  a->names_ = std::move(var_names);
  a->bounds_ = std::move(bounds);
  a->provenance_ = std::move(provenance);
  a->tower_.table = a->base_.get();
  a->tower_.s = a->base_->size();
  a->tower_.bounds = a->bounds_;
  a->tower_.finalize_layout();

  for (std::size_t i = 0; i < r; ++i) {
    const Polynomial& rule = rules[i];
    if (rule.table() != a->base_ || rule.num_vars() != r)
      throw std::invalid_argument("rule for " + a->names_[i] + " has the wrong shape");
    std::vector<Int> dense(a->tower_.element_size(i + 1), 0);
    for (const auto& [m, c] : rule.terms()) {
      for (std::size_t j = 0; j < r; ++j) {
        if (j > i && m[j] != 0)
          throw std::invalid_argument("rule for " + a->names_[i] + " involves later variable " + a->names_[j] +
                                      " (rules must be triangular)");
        if (j <= i && m[j] > a->bounds_[j])
          throw std::invalid_argument("rule for " + a->names_[i] + " leaves the exponent bounds in " + a->names_[j]);
      }
      const std::size_t idx = kernels::monomial_index(a->tower_, m) * a->tower_.s;
      std::copy(c.begin(), c.end(), dense.begin() + static_cast<long>(idx));
    }
    a->tower_.rules.push_back(std::move(dense));
  }
  a->rules_ = std::move(rules);
  return a;
}

Int PresentedAlgebra::free_rank() const {
  Int rank = 1;
  for (int b : bounds_) rank = checked_mul(rank, b + 1);
  return rank;
}

std::vector<Monomial> PresentedAlgebra::basis() const {
  std::vector<Monomial> out;
  const auto n = tower_.level_size.back();
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(kernels::index_monomial(tower_, i));
  return out;
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(AlgebraPtr algebra, std::vector<Int> dense)
    : algebra_(std::move(algebra)), data_(std::move(dense)) {
  if (!algebra_) throw std::invalid_argument("algebra element needs an algebra");
  if (data_.size() != algebra_->tower().element_size(algebra_->num_vars()))
    throw std::invalid_argument("dense element has the wrong size");
}

AlgebraElement AlgebraElement::zero(AlgebraPtr algebra) {
  const auto n = algebra->tower().element_size(algebra->num_vars());
  return AlgebraElement(std::move(algebra), std::vector<Int>(n, 0));
}

AlgebraElement AlgebraElement::one(AlgebraPtr algebra) {
  auto t = algebra->base();
  return scalar(std::move(algebra), VirtualCharacter::trivial(t));
}

AlgebraElement AlgebraElement::scalar(AlgebraPtr algebra, const VirtualCharacter& c) {
  if (c.table() != algebra->base()) throw std::invalid_argument("scalar over a different table");
  auto x = zero(std::move(algebra));
  std::copy(c.mults().begin(), c.mults().end(), x.data_.begin());
  return x;
}

AlgebraElement AlgebraElement::variable(AlgebraPtr algebra, std::size_t var) {
  const auto poly = Polynomial::variable(algebra->base(), algebra->num_vars(), var);
  return reduce(poly, algebra);
}

bool AlgebraElement::is_zero() const { return kernels::is_zero(data_.data(), data_.size()); }

VirtualCharacter AlgebraElement::coefficient(const Monomial& m) const {
  const auto& t = algebra_->tower();
  const std::size_t idx = kernels::monomial_index(t, m) * t.s;
  return VirtualCharacter(algebra_->base(), std::vector<Int>(data_.begin() + static_cast<long>(idx),
                                                             data_.begin() + static_cast<long>(idx + t.s)));
}

std::vector<std::pair<Monomial, VirtualCharacter>> AlgebraElement::terms() const {
  const auto& t = algebra_->tower();
  std::vector<std::pair<Monomial, VirtualCharacter>> out;
  for (std::size_t i = 0; i < t.level_size.back(); ++i) {
    const Int* c = data_.data() + i * t.s;
    if (kernels::is_zero(c, t.s)) continue;
    out.emplace_back(kernels::index_monomial(t, i), VirtualCharacter(algebra_->base(), std::vector<Int>(c, c + t.s)));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Polynomial AlgebraElement::to_polynomial() const {
  Polynomial p(algebra_->base(), algebra_->num_vars());
  for (const auto& [m, c] : terms()) p.add_term(m, c);
  return p;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (o.algebra_ != algebra_) throw std::invalid_argument("elements of different algebras");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = checked_add(data_[i], o.data_[i]);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (o.algebra_ != algebra_) throw std::invalid_argument("elements of different algebras");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = checked_sub(data_[i], o.data_[i]);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const { return -1 * *this; }

AlgebraElement multiply_serial(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.algebra() != b.algebra()) throw std::invalid_argument("elements of different algebras");
  auto out = AlgebraElement::zero(a.algebra());
  std::vector<Int> d(out.dense().size(), 0);
  const auto& t = a.algebra()->tower();
  kernels::multiply_serial(t, t.levels(), a.dense().data(), b.dense().data(), d.data());
  return AlgebraElement(a.algebra(), std::move(d));
}

AlgebraElement multiply_parallel(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.algebra() != b.algebra()) throw std::invalid_argument("elements of different algebras");
  const auto& t = a.algebra()->tower();
  std::vector<Int> d(t.element_size(t.levels()), 0);
  kernels::multiply_parallel(t, t.levels(), a.dense().data(), b.dense().data(), d.data());
  return AlgebraElement(a.algebra(), std::move(d));
}

namespace {
constexpr std::size_t kParallelThreshold = 8192;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.data_.size() >= kParallelThreshold && omp_get_max_threads() > 1) return multiply_parallel(a, b);
  return multiply_serial(a, b);
}

AlgebraElement operator*(const VirtualCharacter& c, const AlgebraElement& a) {
  return AlgebraElement::scalar(a.algebra_, c) * a;
}

AlgebraElement operator*(Int c, const AlgebraElement& a) {
  AlgebraElement out = a;
  for (auto& v : out.data_) v = checked_mul(v, c);
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  return a.algebra_ == b.algebra_ && a.data_ == b.data_;
}

AlgebraElement AlgebraElement::pow(unsigned k) const {
  AlgebraElement result = one(algebra_);
  AlgebraElement base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string AlgebraElement::to_string() const {
  const auto ts = terms();
  if (ts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ts) {
    if (!first) os << " + ";
    first = false;
    const bool constant = std::all_of(m.begin(), m.end(), [](int a) { return a == 0; });
    os << '(' << c.to_string() << ')';
    if (constant) continue;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      os << '*' << algebra_->var_names()[i];
      if (m[i] > 1) os << '^' << m[i];
    }
  }
  return os.str();
}

AlgebraElement reduce(const Polynomial& x, const AlgebraPtr& algebra) {
  if (x.table() != algebra->base() || x.num_vars() != algebra->num_vars())
    throw std::invalid_argument("reduce: polynomial does not match the algebra");
  const auto& t = algebra->tower();
  return AlgebraElement(algebra, kernels::reduce_dense(t, t.levels(), x.terms()));
}

Polynomial reduce_by_rewriting(const Polynomial& x, const AlgebraPtr& algebra, kernels::RewriteOrder order,
                               std::mt19937_64* rng) {
  if (x.table() != algebra->base() || x.num_vars() != algebra->num_vars())
    throw std::invalid_argument("reduce: polynomial does not match the algebra");
  std::vector<SparseTerms> rules;
  for (const auto& r : algebra->rules()) rules.push_back(r.terms());
  Polynomial out(algebra->base(), algebra->num_vars());
  for (const auto& [m, c] :
       kernels::reduce_by_rewriting(*algebra->base(), algebra->bounds(), rules, x.terms(), order, rng))
    out.add_term(m, c);
  return out;
}

// ---------------------------------------------------------------------------
// Bundle constructions

std::vector<VirtualCharacter> theta_polynomial(const VirtualCharacter& E) {
  if (!E.is_effective()) throw std::invalid_argument("theta: class " + E.to_string() + " is not effective");
  const Int n = E.rank();
  if (n < 1) throw std::invalid_argument("theta: class must have rank at least 1");
  const auto lam = lambda_series(E, n);
  std::vector<VirtualCharacter> theta;
  for (Int i = 0; i <= n; ++i) {
    const auto& l = lam[static_cast<std::size_t>(n - i)];
    theta.push_back(i % 2 == 0 ? l : -l);
  }
  return theta;
}

namespace {

// Dense unit of A_level.
std::vector<Int> dense_one(const Tower& t, std::size_t level) {
  std::vector<Int> x(t.element_size(level), 0);
  x[t.table->trivial_index()] = 1;
  return x;
}

// A_{level-1} element placed as the t_level^0 block of A_level.
std::vector<Int> lift(const Tower& t, std::size_t level, const std::vector<Int>& lower) {
  std::vector<Int> x(t.element_size(level), 0);
  std::copy(lower.begin(), lower.end(), x.begin());
  return x;
}

Polynomial dense_to_polynomial(const TablePtr& table, const Tower& t, std::size_t level, const std::vector<Int>& dense,
                               std::size_t num_vars) {
  Polynomial p(table, num_vars);
  for (std::size_t i = 0; i < t.level_size[level]; ++i) {
    const Int* c = dense.data() + i * t.s;
    if (kernels::is_zero(c, t.s)) continue;
    Monomial m(num_vars, 0);
    std::size_t idx = i;
    for (std::size_t j = 0; j < level; ++j) {
      const auto b = static_cast<std::size_t>(t.bounds[j]) + 1;
      m[j] = static_cast<int>(idx % b);
      idx /= b;
    }
    p.add_term(m, std::vector<Int>(c, c + t.s));
  }
  return p;
}

AlgebraPtr build_flag(const VirtualCharacter& E, int r, const std::string& kind) {
  if (!E.is_effective()) throw std::invalid_argument("flag bundle: class " + E.to_string() + " is not effective");
  const Int n = E.rank();
  if (r < 0 || r > n)
    throw std::invalid_argument("flag bundle: r = " + std::to_string(r) + " out of range 0.." + std::to_string(n));
  const auto& table = E.table();

  Tower t;
  t.table = table.get();
  t.s = table->size();
  t.finalize_layout();

  // lambda^k of the current quotient class E - t_1 - ... - t_{i-1}, as A_{i-1} elements.
  std::vector<std::vector<Int>> lam;
  for (const auto& l : lambda_series(E, n)) lam.push_back(l.mults());

  for (int i = 1; i <= r; ++i) {
    const auto m = static_cast<std::size_t>(n - i + 1);
    const std::size_t blk = t.element_size(static_cast<std::size_t>(i - 1));
    std::vector<Int> rule(m * blk, 0);
    for (std::size_t j = 0; j < m; ++j) {
      const Int sign = (m - j + 1) % 2 == 0 ? 1 : -1;
      const auto& src = lam[m - j];
      for (std::size_t q = 0; q < blk; ++q) rule[j * blk + q] = checked_mul(sign, src[q]);
    }
    t.bounds.push_back(static_cast<int>(m) - 1);
    t.rules.push_back(std::move(rule));
    t.finalize_layout();

    const auto level = static_cast<std::size_t>(i);
    SparseTerms var_terms;
    Monomial mono(level, 0);
    mono[level - 1] = 1;
    var_terms[mono] = VirtualCharacter::trivial(table).mults();
    const auto ti = kernels::reduce_dense(t, level, var_terms);

    // lambda^k(Q_i) = lambda^k(Q_{i-1}) - t_i lambda^{k-1}(Q_i).
    std::vector<std::vector<Int>> next{dense_one(t, level)};
    for (std::size_t k = 1; k < m; ++k) {
      auto cur = lift(t, level, lam[k]);
      std::vector<Int> prod(cur.size(), 0);
      kernels::multiply_serial(t, level, ti.data(), next[k - 1].data(), prod.data());
      for (std::size_t q = 0; q < cur.size(); ++q) cur[q] = checked_sub(cur[q], prod[q]);
      next.push_back(std::move(cur));
    }
    lam = std::move(next);
  }

  std::vector<std::string> names;
  if (kind == "pbundle")
    names.push_back("t");
  std::vector<Polynomial> rules;
  for (std::size_t i = 0; i < t.rules.size(); ++i)
    rules.push_back(dense_to_polynomial(table, t, i + 1, t.rules[i], t.bounds.size()));
  Provenance prov{kind, E, r, ""};
  return PresentedAlgebra::create(table, std::move(names), t.bounds, std::move(rules), std::move(prov));
}

}  // namespace

AlgebraPtr projective_bundle(const VirtualCharacter& E) {
  theta_polynomial(E);  // precondition checks
  return build_flag(E, 1, "pbundle");
}

AlgebraPtr flag_bundle(const VirtualCharacter& E, int r) { return build_flag(E, r, "flag"); }

// ---------------------------------------------------------------------------
// lambda operations on line-decomposed classes

LineDecomposition line_decomposition(const AlgebraElement& x) {
  const auto& A = *x.algebra();
  LineDecomposition d{VirtualCharacter::zero(A.base()), std::vector<Int>(A.num_vars(), 0)};
  const auto triv = VirtualCharacter::trivial(A.base());
  for (const auto& [m, c] : x.terms()) {
    const int degree = std::accumulate(m.begin(), m.end(), 0);
    if (degree == 0) {
      d.base = c;
      continue;
    }
    const auto var = static_cast<std::size_t>(std::find(m.begin(), m.end(), 1) - m.begin());
    const Int k = c[A.base()->trivial_index()];
    if (degree != 1 || !(c == k * triv))
      throw std::invalid_argument("element " + x.to_string() + " is not in line-class-decomposed form");
    d.lines[var] = k;
  }
  return d;
}

std::vector<AlgebraElement> lambda_series_of_class(Int max_k, const LineDecomposition& x, const AlgebraPtr& algebra) {
  if (max_k < 0) throw std::invalid_argument("lambda: degree must be non-negative");
  if (x.base.table() != algebra->base()) throw std::invalid_argument("lambda: base class over a different table");
  if (x.lines.size() != algebra->num_vars()) throw std::invalid_argument("lambda: one line coefficient per variable");
  std::vector<AlgebraElement> series;
  for (const auto& l : lambda_series(x.base, max_k)) series.push_back(AlgebraElement::scalar(algebra, l));
  const auto K = static_cast<std::size_t>(max_k);
  for (std::size_t j = 0; j < x.lines.size(); ++j) {
    const Int n = x.lines[j];
    if (n == 0) continue;
    const auto t = AlgebraElement::variable(algebra, j);
    for (Int rep = 0; rep < (n > 0 ? n : -n); ++rep) {
      if (n > 0) {
        for (std::size_t d = K; d >= 1; --d) series[d] += t * series[d - 1];
      } else {
        for (std::size_t d = 1; d <= K; ++d) series[d] -= t * series[d - 1];
      }
    }
  }
  return series;
}

AlgebraElement lambda_of_class(Int k, const LineDecomposition& x, const AlgebraPtr& algebra) {
  return lambda_series_of_class(k, x, algebra).back();
}

AlgebraElement lambda_of_class(Int k, const AlgebraElement& x) {
  return lambda_of_class(k, line_decomposition(x), x.algebra());
}

AlgebraElement permute_variables(const AlgebraElement& x, const std::vector<std::size_t>& perm) {
  const auto& A = x.algebra();
  if (perm.size() != A->num_vars()) throw std::invalid_argument("permutation has the wrong length");
  Polynomial p(A->base(), A->num_vars());
  for (const auto& [m, c] : x.terms()) {
    Monomial pm(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) pm[perm[i]] = m[i];
    p.add_term(pm, c);
  }
  return reduce(p, A);
}

// ---------------------------------------------------------------------------
// Schur elements and independence certificates

std::vector<std::vector<int>> box_partitions(int rows, int cols) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int max_part) -> void {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int p = 1; p <= max_part; ++p) {
      cur.push_back(p);
      self(self, p);
      cur.pop_back();
    }
  };
  if (rows < 0 || cols < 0) return out;
  rec(rec, cols);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
  });
  return out;
}

Polynomial schur_polynomial(const std::vector<int>& partition, std::size_t r, const TablePtr& table,
                            std::size_t num_vars, std::size_t var_offset) {
  if (var_offset + r > num_vars) throw std::invalid_argument("schur: variables out of range");
  Polynomial out(table, num_vars);
  const auto triv = VirtualCharacter::trivial(table);
  if (partition.size() > r) return out;
  std::vector<std::vector<int>> tab;
  for (int len : partition) tab.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < tab.size(); ++i)
    for (std::size_t j = 0; j < tab[i].size(); ++j) cells.emplace_back(i, j);
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      Monomial m(num_vars, 0);
      for (const auto& row : tab)
        for (int v : row) ++m[var_offset + static_cast<std::size_t>(v)];
      out.add_term(m, triv);
      return;
    }
    const auto [i, j] = cells[idx];
    int lo = 0;
    if (j > 0) lo = std::max(lo, tab[i][j - 1]);
    if (i > 0) lo = std::max(lo, tab[i - 1][j] + 1);
    for (int v = lo; v < static_cast<int>(r); ++v) {
      tab[i][j] = v;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> f;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

// Primes p = 1 mod e below 2^31, descending, paired with a primitive e-th root of unity.
std::vector<std::pair<u64, u64>> primes_with_roots(u64 e, std::size_t count) {
  std::vector<std::pair<u64, u64>> out;
  const u64 limit = (u64{1} << 31) - 1;
  for (u64 k = limit / e; k > 0 && out.size() < count; --k) {
    const u64 p = k * e + 1;
    if (!is_prime(p)) continue;
    const auto factors = prime_factors(e);
    for (u64 a = 2; a < p; ++a) {
      const u64 w = powmod(a, (p - 1) / e, p);
      bool primitive = true;
      for (u64 q : factors) primitive = primitive && powmod(w, e / q, p) != 1;
      if (primitive) {
        out.emplace_back(p, w);
        break;
      }
    }
  }
  return out;
}

std::size_t rank_mod_p(std::vector<std::vector<u64>> m, u64 p) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const u64 inv = powmod(m[rank][c], p - 2, p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const u64 f = mulmod(m[r][c], inv, p);
      for (std::size_t j = c; j < cols; ++j) m[r][j] = (m[r][j] + p - mulmod(f, m[rank][j], p)) % p;
    }
    ++rank;
  }
  return rank;
}

u64 reduce_mod(Int v, u64 p) {
  const Int r = v % static_cast<Int>(p);
  return static_cast<u64>(r < 0 ? r + static_cast<Int>(p) : r);
}

}  // namespace

bool certify_independent(const std::vector<AlgebraElement>& elements) {
  if (elements.empty()) return true;
  const auto& A = elements[0].algebra();
  for (const auto& x : elements)
    if (x.algebra() != A) throw std::invalid_argument("independence: elements of different algebras");
  const auto& table = *A->base();
  const std::size_t N = A->tower().level_size.back();
  if (elements.size() > N) return false;
  const std::size_t s = table.size();
  const auto e = static_cast<u64>(table.exponent());
  for (const auto& [p, w] : primes_with_roots(e, 3)) {
    bool all_full = true;
    for (std::size_t c = 0; c < table.num_classes() && all_full; ++c) {
      std::vector<u64> chi(s, 0);
      for (std::size_t i = 0; i < s; ++i) {
        const auto coeffs = table.value(i, c).coeffs();
        for (std::size_t k = 0; k < coeffs.size(); ++k)
          chi[i] = (chi[i] + mulmod(reduce_mod(coeffs[k], p), powmod(w, k, p), p)) % p;
      }
      std::vector<std::vector<u64>> mat;
      for (const auto& x : elements) {
        std::vector<u64> row(N, 0);
        for (std::size_t b = 0; b < N; ++b)
          for (std::size_t i = 0; i < s; ++i) {
            const Int v = x.dense()[b * s + i];
            if (v != 0) row[b] = (row[b] + mulmod(reduce_mod(v, p), chi[i], p)) % p;
          }
        mat.push_back(std::move(row));
      }
      all_full = rank_mod_p(std::move(mat), p) == elements.size();
    }
    if (all_full) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Grassmann rings

Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
  return r;
}

Int falling_factorial(Int n, Int k) {
  Int r = 1;
  for (Int i = 0; i < k; ++i) r = checked_mul(r, n - i);
  return r;
}

GrassmannRing::GrassmannRing(const VirtualCharacter& E, int r)
    : ambient_(E), r_(r), n_(E.rank()), flag_(flag_bundle(E, r)) {
  const auto rr = static_cast<std::size_t>(r);
  const auto triv = VirtualCharacter::trivial(E.table());
  std::vector<Polynomial> elem(rr + 1, Polynomial(E.table(), rr));
  for (std::size_t mask = 0; mask < (std::size_t{1} << rr); ++mask) {
    Monomial m(rr, 0);
    std::size_t deg = 0;
    for (std::size_t j = 0; j < rr; ++j)
      if (mask & (std::size_t{1} << j)) {
        m[j] = 1;
        ++deg;
      }
    elem[deg].add_term(m, triv);
  }
  for (const auto& p : elem) generators_.push_back(reduce(p, flag_));
}

LineDecomposition GrassmannRing::tautological() const {
  return {VirtualCharacter::zero(ambient_.table()), std::vector<Int>(static_cast<std::size_t>(r_), 1)};
}

AlgebraElement GrassmannRing::schur(const std::vector<int>& partition) const {
  return reduce(schur_polynomial(partition, static_cast<std::size_t>(r_), ambient_.table(), flag_->num_vars()), flag_);
}

std::vector<AlgebraElement> GrassmannRing::schur_basis() const {
  std::vector<AlgebraElement> out;
  for (const auto& p : basis_partitions()) out.push_back(schur(p));
  return out;
}

Int GrassmannRing::free_rank() const { return static_cast<Int>(basis_partitions().size()); }

bool GrassmannRing::is_symmetric(const AlgebraElement& x) const {
  if (x.algebra() != flag_) throw std::invalid_argument("element is not in this Grassmann ring's flag algebra");
  const auto rr = static_cast<std::size_t>(r_);
  for (std::size_t j = 0; j + 1 < rr; ++j) {
    std::vector<std::size_t> perm(rr);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[j], perm[j + 1]);
    if (!(permute_variables(x, perm) == x)) return false;
  }
  return true;
}

Int free_rank(const PresentedAlgebra& a) { return a.free_rank(); }
Int free_rank(const GrassmannRing& g) { return g.free_rank(); }

// ---------------------------------------------------------------------------
// Tensor products

AlgebraPtr kunneth(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a->base() != b->base()) throw std::invalid_argument("kunneth: algebras over different base tables");
  const std::size_t na = a->num_vars(), nb = b->num_vars(), n = na + nb;
  std::vector<std::string> names = a->var_names();
  for (const auto& nm : b->var_names()) names.push_back(nm + "'");
  std::vector<int> bounds = a->bounds();
  bounds.insert(bounds.end(), b->bounds().begin(), b->bounds().end());
  std::vector<Polynomial> rules;
  auto shifted = [&](const Polynomial& p, std::size_t offset) {
    Polynomial q(a->base(), n);
    for (const auto& [m, c] : p.terms()) {
      Monomial nm(n, 0);
      std::copy(m.begin(), m.end(), nm.begin() + static_cast<long>(offset));
      q.add_term(nm, c);
    }
    return q;
  };
  for (const auto& r : a->rules()) rules.push_back(shifted(r, 0));
  for (const auto& r : b->rules()) rules.push_back(shifted(r, na));
  Provenance prov{"kunneth", std::nullopt, 0, a->provenance().kind + " x " + b->provenance().kind};
  return PresentedAlgebra::create(a->base(), std::move(names), std::move(bounds), std::move(rules), std::move(prov));
}

AlgebraElement embed(const AlgebraElement& x, const AlgebraPtr& target, std::size_t var_offset) {
  const auto& src = *x.algebra();
  if (src.base() != target->base()) throw std::invalid_argument("embed: different base tables");
  if (var_offset + src.num_vars() > target->num_vars()) throw std::invalid_argument("embed: variable range too large");
  for (std::size_t i = 0; i < src.num_vars(); ++i)
    if (src.bounds()[i] != target->bounds()[var_offset + i]) throw std::invalid_argument("embed: bounds disagree");
  Polynomial p(target->base(), target->num_vars());
  for (const auto& [m, c] : x.terms()) {
    Monomial nm(target->num_vars(), 0);
    std::copy(m.begin(), m.end(), nm.begin() + static_cast<long>(var_offset));
    p.add_term(nm, c);
  }
  return reduce(p, target);
}

GrassmannProduct kunneth(const GrassmannRing& a, const GrassmannRing& b) {
  GrassmannProduct out{kunneth(a.flag(), b.flag()), {}};
  const std::size_t offset = a.flag()->num_vars();
  std::vector<AlgebraElement> right;
  for (const auto& y : b.schur_basis()) right.push_back(embed(y, out.algebra, offset));
  for (const auto& x : a.schur_basis()) {
    const auto left = embed(x, out.algebra, 0);
    for (const auto& y : right) out.basis.push_back(left * y);
  }
  return out;
}

}  // namespace kzero
