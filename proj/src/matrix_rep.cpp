#include "kzero/matrix_rep.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace kzero {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_ints(std::size_t rows, std::size_t cols, const std::vector<Int>& entries) {
  if (entries.size() != rows * cols) throw std::invalid_argument("matrix entry count mismatch");
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) m.data_[i] = entries[i];
  return m;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RationalMatrix RationalMatrix::scaled(const Rational& q) const {
  RationalMatrix m = *this;
  for (auto& v : m.data_) v *= q;
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  RationalMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) m(i, j) += x * b(k, j);
    }
  return m;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Rational RationalMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  RationalMatrix m = *this;
  Rational det = 1;
  const std::size_t n = rows_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix m = *this;
  RationalMatrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) throw ArithmeticError("matrix is singular");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const Rational piv = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

Int RationalMatrix::rank() const {
  RationalMatrix m = *this;
  Int rank = 0;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
    std::size_t p = row;
    while (p < rows_ && m(p, c) == 0) ++p;
    if (p == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m(p, j), m(row, j));
    for (std::size_t r = row + 1; r < rows_; ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(row, c);
      for (std::size_t j = c; j < cols_; ++j) m(r, j) -= f * m(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

RationalMatrix RationalMatrix::compound(std::size_t k) const {
  if (rows_ != cols_) throw std::invalid_argument("compound matrix of a non-square matrix");
  const auto basis = subsets(rows_, k);
  RationalMatrix out(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      RationalMatrix minor(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = (*this)(basis[a][i], basis[b][j]);
      out(a, b) = minor.determinant();
    }
  return out;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << kzero::to_string((*this)(i, j));
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[static_cast<std::size_t>(b[x])];
  return r;
}

std::vector<int> cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> type;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(p[y])) {
      seen[y] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

GroupElementsPtr finish(std::string name, std::vector<Perm> perms, std::vector<int> class_of) {
  auto g = std::make_shared<GroupElements>();
  g->name = std::move(name);
  g->perms = std::move(perms);
  g->class_of = std::move(class_of);
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < g->perms.size(); ++i) index[g->perms[i]] = static_cast<int>(i);
  const std::size_t n = g->perms.size();
  g->mult.assign(n, std::vector<int>(n));
  g->inverse.assign(n, -1);
  Perm id(g->perms[0].size());
  std::iota(id.begin(), id.end(), 0);
  g->identity = index.at(id);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      g->mult[a][b] = index.at(compose(g->perms[a], g->perms[b]));
      if (g->mult[a][b] == g->identity) g->inverse[a] = static_cast<int>(b);
    }
  return g;
}

GroupElementsPtr make_concrete(const std::string& name) {
  if (name == "S3" || name == "S4") {
    const int deg = name == "S3" ? 3 : 4;
    const std::map<std::vector<int>, int> classes =
        deg == 3 ? std::map<std::vector<int>, int>{{{1, 1, 1}, 0}, {{2, 1}, 1}, {{3}, 2}}
                 : std::map<std::vector<int>, int>{{{1, 1, 1, 1}, 0}, {{2, 1, 1}, 1}, {{2, 2}, 2}, {{3, 1}, 3}, {{4}, 4}};
    Perm p(static_cast<std::size_t>(deg));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> perms;
    std::vector<int> cls;
    do {
      perms.push_back(p);
      cls.push_back(classes.at(cycle_type(p)));
    } while (std::next_permutation(p.begin(), p.end()));
    return finish(name, std::move(perms), std::move(cls));
  }
  if (name.size() >= 2 && name[0] == 'C') {
    const int n = std::stoi(name.substr(1));
    if (n < 1 || n > 12) throw std::invalid_argument("no concrete realization for " + name);
    std::vector<Perm> perms;
    std::vector<int> cls;
    for (int k = 0; k < n; ++k) {
      Perm p(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) p[static_cast<std::size_t>(x)] = (x + k) % n;
      perms.push_back(std::move(p));
      cls.push_back(k);
    }
    return finish(name, std::move(perms), std::move(cls));
  }
  throw std::invalid_argument("no concrete realization for " + name);
}

int permutation_sign(const Perm& p) {
  int sign = 1;
  for (int len : cycle_type(p))
    if (len % 2 == 0) sign = -sign;
  return sign;
}

}  // namespace

GroupElementsPtr concrete_group(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, GroupElementsPtr> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  auto g = make_concrete(name);
  cache.emplace(name, g);
  return g;
}

MatrixRepresentation::MatrixRepresentation(GroupElementsPtr group, std::vector<RationalMatrix> matrices)
    : group_(std::move(group)), mats_(std::move(matrices)) {
  if (mats_.size() != group_->order()) throw std::invalid_argument("one matrix per group element required");
  dim_ = mats_.empty() ? 0 : mats_[0].rows();
  for (const auto& m : mats_)
    if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("representation matrices must be square of one size");
  if (!(mats_[static_cast<std::size_t>(group_->identity)] == RationalMatrix::identity(dim_)))
    throw std::invalid_argument("identity element must act as the identity matrix");
  for (std::size_t a = 0; a < mats_.size(); ++a)
    for (std::size_t b = 0; b < mats_.size(); ++b)
      if (!(mats_[a] * mats_[b] == mats_[static_cast<std::size_t>(group_->mult[a][b])]))
        throw std::invalid_argument("matrices violate the group law");
}

ClassFunction MatrixRepresentation::character(const CharacterTable& table) const {
  ClassFunction out(table.num_classes(), CyclotomicInteger(table.exponent()));
  std::vector<bool> done(table.num_classes(), false);
  for (std::size_t g = 0; g < mats_.size(); ++g) {
    const auto c = static_cast<std::size_t>(group_->class_of[g]);
    if (done[c]) continue;
    done[c] = true;
    out[c] = CyclotomicInteger::constant(table.exponent(), to_int_exact(mats_[g].trace()));
  }
  return out;
}

MatrixRepresentation regular_permutation_rep(const GroupElementsPtr& group) {
  const std::size_t n = group->order();
  std::vector<RationalMatrix> mats;
  for (std::size_t g = 0; g < n; ++g) {
    RationalMatrix m(n, n);
    for (std::size_t h = 0; h < n; ++h) m(static_cast<std::size_t>(group->mult[g][h]), h) = 1;
    mats.push_back(std::move(m));
  }
  return MatrixRepresentation(group, std::move(mats));
}

MatrixRepresentation natural_permutation_rep(const GroupElementsPtr& group) {
  std::vector<RationalMatrix> mats;
  for (const auto& p : group->perms) {
    RationalMatrix m(p.size(), p.size());
    for (std::size_t x = 0; x < p.size(); ++x) m(static_cast<std::size_t>(p[x]), x) = 1;
    mats.push_back(std::move(m));
  }
  return MatrixRepresentation(group, std::move(mats));
}

MatrixRepresentation trivial_matrix_rep(const GroupElementsPtr& group, std::size_t dim) {
  return MatrixRepresentation(group, std::vector<RationalMatrix>(group->order(), RationalMatrix::identity(dim)));
}

MatrixRepresentation sign_matrix_rep(const GroupElementsPtr& group) {
  std::vector<RationalMatrix> mats;
  for (const auto& p : group->perms) mats.push_back(RationalMatrix::from_ints(1, 1, {permutation_sign(p)}));
  return MatrixRepresentation(group, std::move(mats));
}

MatrixRepresentation standard_matrix_rep(const GroupElementsPtr& group) {
  const auto natural = natural_permutation_rep(group);
  const std::size_t n = natural.dimension();
  // Basis e_i - e_{i+1} of the sum-zero subspace; coordinates via a left inverse.
  RationalMatrix basis(n, n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    basis(i, i) = 1;
    basis(i + 1, i) = -1;
  }
  RationalMatrix bt(n - 1, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) bt(j, i) = basis(i, j);
  const RationalMatrix left_inverse = (bt * basis).inverse() * bt;
  std::vector<RationalMatrix> mats;
  for (const auto& m : natural.matrices()) mats.push_back(left_inverse * m * basis);
  return MatrixRepresentation(group, std::move(mats));
}

MatrixRepresentation direct_sum(const MatrixRepresentation& a, const MatrixRepresentation& b) {
  if (a.group() != b.group()) throw std::invalid_argument("direct sum of representations of different groups");
  const std::size_t da = a.dimension(), db = b.dimension();
  std::vector<RationalMatrix> mats;
  for (std::size_t g = 0; g < a.group()->order(); ++g) {
    RationalMatrix m(da + db, da + db);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) m(i, j) = a(g)(i, j);
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < db; ++j) m(da + i, da + j) = b(g)(i, j);
    mats.push_back(std::move(m));
  }
  return MatrixRepresentation(a.group(), std::move(mats));
}

MatrixRepresentation conjugate(const MatrixRepresentation& rep, const RationalMatrix& change_of_basis) {
  const RationalMatrix inv = change_of_basis.inverse();
  std::vector<RationalMatrix> mats;
  for (const auto& m : rep.matrices()) mats.push_back(change_of_basis * m * inv);
  return MatrixRepresentation(rep.group(), std::move(mats));
}

RationalMatrix equivariant_splitting(const MatrixRepresentation& source, const MatrixRepresentation& target,
                                     const RationalMatrix& phi, const RationalMatrix& section) {
  if (source.group() != target.group()) throw std::invalid_argument("splitting: representations of different groups");
  const std::size_t dl = source.dimension(), dm = target.dimension();
  if (phi.rows() != dm || phi.cols() != dl) throw std::invalid_argument("splitting: phi has the wrong shape");
  if (section.rows() != dl || section.cols() != dm) throw std::invalid_argument("splitting: s has the wrong shape");
  const auto& G = *source.group();
  for (std::size_t g = 0; g < G.order(); ++g)
    if (!(phi * source(g) == target(g) * phi))
      throw std::invalid_argument("splitting: phi is not G-equivariant (fails for element " + std::to_string(g) + ")");
  if (!(phi * section == RationalMatrix::identity(dm)))
    throw std::invalid_argument("splitting: s is not a section of phi (phi*s != identity)");
  RationalMatrix avg(dl, dm);
  for (std::size_t g = 0; g < G.order(); ++g)
    avg += source(g) * section * target(static_cast<std::size_t>(G.inverse[g]));
  return avg.scaled(Rational(1, static_cast<Int>(G.order())));
}

ClassFunction exterior_power_oracle(const MatrixRepresentation& rep, std::size_t k, const CharacterTable& table) {
  if (k > rep.dimension()) throw std::invalid_argument("exterior power degree exceeds the dimension");
  ClassFunction out(table.num_classes(), CyclotomicInteger(table.exponent()));
  std::vector<bool> done(table.num_classes(), false);
  const auto& G = *rep.group();
  for (std::size_t g = 0; g < G.order(); ++g) {
    const auto c = static_cast<std::size_t>(G.class_of[g]);
    if (done[c]) continue;
    done[c] = true;
    out[c] = CyclotomicInteger::constant(table.exponent(), to_int_exact(rep(g).compound(k).trace()));
  }
  return out;
}

}  // namespace kzero
