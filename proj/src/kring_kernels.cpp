#include "kzero/kring_kernels.hpp"

#include <algorithm>
#include <exception>

#include <omp.h>

namespace kzero::kernels {

void Tower::finalize_layout() {
  level_size.assign(bounds.size() + 1, 1);
  scratch.assign(bounds.size() + 1, 0);
  for (std::size_t i = 1; i <= bounds.size(); ++i) {
    if (bounds[i - 1] < 0) throw std::invalid_argument("exponent bounds must be non-negative");
    const auto b = static_cast<std::size_t>(bounds[i - 1]) + 1;
    level_size[i] = level_size[i - 1] * b;
    scratch[i] = (2 * b - 1) * level_size[i - 1] * s + scratch[i - 1];
  }
}

std::size_t monomial_index(const Tower& tower, const Monomial& m) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < tower.levels(); ++i) {
    const int a = i < m.size() ? m[i] : 0;
    if (a < 0 || a > tower.bounds[i]) throw std::out_of_range("monomial exceeds exponent bounds");
    idx += static_cast<std::size_t>(a) * tower.level_size[i];
  }
  return idx;
}

Monomial index_monomial(const Tower& tower, std::size_t index) {
  Monomial m(tower.levels(), 0);
  for (std::size_t i = 0; i < tower.levels(); ++i) {
    const auto b = static_cast<std::size_t>(tower.bounds[i]) + 1;
    m[i] = static_cast<int>(index % b);
    index /= b;
  }
  return m;
}

bool is_zero(const Int* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] != 0) return false;
  return true;
}

namespace {

void add_into(Int* out, const Int* in, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (in[i] != 0) out[i] = checked_add(out[i], in[i]);
}

void multiply_impl(const Tower& t, std::size_t level, const Int* x, const Int* y, Int* out, Int* scratch) {
  if (level == 0) {
    t.table->multiply_accumulate(x, y, out);
    return;
  }
  const auto B = static_cast<std::size_t>(t.bounds[level - 1]) + 1;
  const std::size_t blk = t.element_size(level - 1);
  Int* temp = scratch;
  Int* rest = scratch + (2 * B - 1) * blk;
  std::fill(temp, rest, Int{0});

  std::vector<char> ynz(B);
  for (std::size_t q = 0; q < B; ++q) ynz[q] = !is_zero(y + q * blk, blk);
  for (std::size_t p = 0; p < B; ++p) {
    if (is_zero(x + p * blk, blk)) continue;
    for (std::size_t q = 0; q < B; ++q)
      if (ynz[q]) multiply_impl(t, level - 1, x + p * blk, y + q * blk, temp + (p + q) * blk, rest);
  }
  const Int* rule = t.rules[level - 1].data();
  for (std::size_t k = 2 * B - 2; k >= B; --k) {
    const Int* c = temp + k * blk;
    if (is_zero(c, blk)) continue;
    for (std::size_t j = 0; j < B; ++j)
      if (!is_zero(rule + j * blk, blk)) multiply_impl(t, level - 1, c, rule + j * blk, temp + (k - B + j) * blk, rest);
  }
  add_into(out, temp, B * blk);
}

}  // namespace

void multiply_serial(const Tower& tower, std::size_t level, const Int* x, const Int* y, Int* out) {
  std::vector<Int> scratch(tower.scratch[level]);
  multiply_impl(tower, level, x, y, out, scratch.data());
}

void multiply_parallel(const Tower& tower, std::size_t level, const Int* x, const Int* y, Int* out) {
  if (level == 0) {
    tower.table->multiply_accumulate(x, y, out);
    return;
  }
  const auto B = static_cast<std::size_t>(tower.bounds[level - 1]) + 1;
  const std::size_t blk = tower.element_size(level - 1);
  const std::size_t inner_scratch = tower.scratch[level - 1];
  const Int* rule = tower.rules[level - 1].data();
  std::vector<Int> temp((2 * B - 1) * blk, 0);
  std::exception_ptr failure;

  const auto width = static_cast<long>(2 * B - 1);
#pragma omp parallel
  {
    std::vector<Int> local(inner_scratch);
#pragma omp for schedule(dynamic)
    for (long kk = 0; kk < width; ++kk) {
      const auto k = static_cast<std::size_t>(kk);
      try {
        const std::size_t lo = k >= B ? k - (B - 1) : 0;
        const std::size_t hi = std::min(k, B - 1);
        for (std::size_t p = lo; p <= hi; ++p) {
          const Int* xp = x + p * blk;
          const Int* yq = y + (k - p) * blk;
          if (is_zero(xp, blk) || is_zero(yq, blk)) continue;
          multiply_impl(tower, level - 1, xp, yq, temp.data() + k * blk, local.data());
        }
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  for (std::size_t k = 2 * B - 2; k >= B; --k) {
    const Int* c = temp.data() + k * blk;
    if (is_zero(c, blk)) continue;
#pragma omp parallel
    {
      std::vector<Int> local(inner_scratch);
#pragma omp for schedule(dynamic)
      for (long jj = 0; jj < static_cast<long>(B); ++jj) {
        const auto j = static_cast<std::size_t>(jj);
        try {
          if (!is_zero(rule + j * blk, blk))
            multiply_impl(tower, level - 1, c, rule + j * blk, temp.data() + (k - B + j) * blk, local.data());
        } catch (...) {
#pragma omp critical
          if (!failure) failure = std::current_exception();
        }
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  add_into(out, temp.data(), B * blk);
}

std::vector<Int> reduce_dense(const Tower& tower, std::size_t level, const SparseTerms& terms) {
  if (level == 0) {
    std::vector<Int> out(tower.s, 0);
    for (const auto& [m, c] : terms) {
      if (std::any_of(m.begin(), m.end(), [](int a) { return a != 0; }))
        throw std::invalid_argument("reduce: monomial involves variables outside the algebra");
      add_into(out.data(), c.data(), tower.s);
    }
    return out;
  }
  const auto B = static_cast<std::size_t>(tower.bounds[level - 1]) + 1;
  const std::size_t blk = tower.element_size(level - 1);
  std::map<int, SparseTerms> groups;
  for (const auto& [m, c] : terms) {
    if (m.size() < level) throw std::invalid_argument("reduce: monomial has too few exponents");
    const int a = m[level - 1];
    if (a < 0) throw std::invalid_argument("reduce: negative exponent");
    Monomial lower(m.begin(), m.begin() + static_cast<long>(level - 1));
    for (std::size_t j = level; j < m.size(); ++j)
      if (m[j] != 0) throw std::invalid_argument("reduce: monomial involves variables outside the algebra");
    auto& slot = groups[a][lower];
    if (slot.empty()) slot.assign(tower.s, 0);
    add_into(slot.data(), c.data(), tower.s);
  }
  std::size_t top = B - 1;
  if (!groups.empty()) top = std::max(top, static_cast<std::size_t>(groups.rbegin()->first));
  std::vector<Int> arr((top + 1) * blk, 0);
  for (const auto& [a, group] : groups) {
    const auto lower = reduce_dense(tower, level - 1, group);
    add_into(arr.data() + static_cast<std::size_t>(a) * blk, lower.data(), blk);
  }
  const Int* rule = tower.rules[level - 1].data();
  for (std::size_t k = top; k >= B; --k) {
    const Int* c = arr.data() + k * blk;
    if (is_zero(c, blk)) continue;
    for (std::size_t j = 0; j < B; ++j)
      if (!is_zero(rule + j * blk, blk)) multiply_serial(tower, level - 1, c, rule + j * blk, arr.data() + (k - B + j) * blk);
  }
  arr.resize(B * blk);
  return arr;
}

namespace {

void accumulate_term(SparseTerms& terms, const Monomial& m, const std::vector<Int>& c) {
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    for (std::size_t i = 0; i < c.size(); ++i) it->second[i] = checked_add(it->second[i], c[i]);
    if (is_zero(it->second.data(), it->second.size())) terms.erase(it);
  } else if (is_zero(c.data(), c.size())) {
    terms.erase(it);
  }
}

}  // namespace

SparseTerms reduce_by_rewriting(const CharacterTable& table, const std::vector<int>& bounds,
                                const std::vector<SparseTerms>& rules, SparseTerms terms, RewriteOrder order,
                                std::mt19937_64* rng) {
  const std::size_t r = bounds.size();
  if (order == RewriteOrder::Random && rng == nullptr) throw std::invalid_argument("random rewriting needs an rng");
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.size() != r) throw std::invalid_argument("rewriting: monomial length mismatch");
    it = is_zero(it->second.data(), it->second.size()) ? terms.erase(it) : std::next(it);
  }
  while (true) {
    Monomial chosen;
    std::size_t var = r;
    if (order == RewriteOrder::HighestIndexFirst) {
      for (const auto& [m, c] : terms)
        for (std::size_t i = r; i-- > 0;)
          if (m[i] > bounds[i]) {
            if (var == r || i > var) {
              var = i;
              chosen = m;
            }
            break;
          }
    } else {
      std::vector<const Monomial*> over;
      for (const auto& [m, c] : terms)
        for (std::size_t i = 0; i < r; ++i)
          if (m[i] > bounds[i]) {
            over.push_back(&m);
            break;
          }
      if (!over.empty()) {
        chosen = *over[std::uniform_int_distribution<std::size_t>(0, over.size() - 1)(*rng)];
        std::vector<std::size_t> vars;
        for (std::size_t i = 0; i < r; ++i)
          if (chosen[i] > bounds[i]) vars.push_back(i);
        var = vars[std::uniform_int_distribution<std::size_t>(0, vars.size() - 1)(*rng)];
      }
    }
    if (var == r) return terms;

    const std::vector<Int> coeff = terms.at(chosen);
    terms.erase(chosen);
    Monomial base = chosen;
    base[var] -= bounds[var] + 1;
    for (const auto& [rm, rc] : rules[var]) {
      Monomial nm = base;
      for (std::size_t i = 0; i < r; ++i) nm[i] += rm[i];
      std::vector<Int> prod(table.size(), 0);
      table.multiply_accumulate(coeff.data(), rc.data(), prod.data());
      accumulate_term(terms, nm, prod);
    }
  }
}

SparseTerms multiply_sparse(const CharacterTable& table, const SparseTerms& a, const SparseTerms& b) {
  SparseTerms out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (ma.size() != mb.size()) throw std::invalid_argument("sparse product: monomial length mismatch");
      Monomial m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      std::vector<Int> prod(table.size(), 0);
      table.multiply_accumulate(ca.data(), cb.data(), prod.data());
      accumulate_term(out, m, prod);
    }
  return out;
}

}  // namespace kzero::kernels
