#include "kzero/rep_ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kzero {

namespace {

std::string pair_label(const CharacterTable& t, std::size_t i, std::size_t j) {
  return "<" + t.irreducible_name(i) + "," + t.irreducible_name(j) + ">";
}

}  // namespace

TablePtr CharacterTable::create(FiniteGroupData group, std::vector<std::vector<CyclotomicInteger>> rows,
                                std::vector<Int> degrees, std::vector<std::string> names) {
  std::shared_ptr<CharacterTable> t(new CharacterTable());
  t->group_ = std::move(group);
  t->rows_ = std::move(rows);
  t->degrees_ = std::move(degrees);
  t->names_ = std::move(names);
  t->validate();
  t->precompute();
  return t;
}

std::string CharacterTable::irreducible_name(std::size_t i) const {
  if (i < names_.size() && !names_[i].empty()) return names_[i];
  return "chi" + std::to_string(i);
}

void CharacterTable::validate() const {
  const auto& g = group_;
  if (g.order < 1) throw ValidationError("group order", "order must be positive");
  if (g.exponent < 1) throw ValidationError("group exponent", "exponent must be positive");
  if (g.classes.empty()) throw ValidationError("class sizes", "no conjugacy classes");
  Int total = 0;
  for (const auto& c : g.classes) {
    if (c.size < 1) throw ValidationError("class sizes", "class '" + c.label + "' has non-positive size");
    total = checked_add(total, c.size);
  }
  if (total != g.order)
    throw ValidationError("class sizes",
                          "sum of class sizes is " + std::to_string(total) + ", group order is " + std::to_string(g.order));
  if (g.classes[0].size != 1) throw ValidationError("identity class", "class 0 must be the identity (size 1)");

  const std::size_t nc = g.num_classes();
  const auto e = static_cast<std::size_t>(g.exponent);
  if (g.power_map.size() != nc) throw ValidationError("power map", "power map must have one row per class");
  for (std::size_t c = 0; c < nc; ++c) {
    if (g.power_map[c].size() != e)
      throw ValidationError("power map", "row " + std::to_string(c) + " must have exponent many entries");
    for (int v : g.power_map[c])
      if (v < 0 || static_cast<std::size_t>(v) >= nc) throw ValidationError("power map", "class index out of range");
    if (g.power_map[c][0] != 0) throw ValidationError("power map", "g^0 must be the identity class");
    if (e > 1 && g.power_map[c][1] != static_cast<int>(c))
      throw ValidationError("power map", "g^1 must lie in the class of g (class " + std::to_string(c) + ")");
  }
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t a = 0; a < e; ++a)
      for (std::size_t b = 0; b < e; ++b) {
        const auto via = static_cast<std::size_t>(g.power_map[c][a]);
        if (g.power_map[via][b] != g.power_map[c][(a * b) % e])
          throw ValidationError("power map", "(g^" + std::to_string(a) + ")^" + std::to_string(b) +
                                                 " disagrees with g^" + std::to_string((a * b) % e) + " on class " +
                                                 std::to_string(c));
      }

  if (rows_.size() != nc)
    throw ValidationError("table shape", std::to_string(rows_.size()) + " irreducible rows for " + std::to_string(nc) +
                                             " classes");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].size() != nc) throw ValidationError("table shape", "row " + std::to_string(i) + " has wrong length");
    for (const auto& v : rows_[i])
      if (v.order() != g.exponent)
        throw ValidationError("table shape", "character values must lie in Z[zeta_e] with e = exponent");
  }
  if (degrees_.size() != rows_.size()) throw ValidationError("degrees", "one degree per irreducible required");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto d = rows_[i][0].as_rational_integer();
    if (!d || *d != degrees_[i] || degrees_[i] < 1)
      throw ValidationError("degrees", "degree of " + irreducible_name(i) + " is declared " + std::to_string(degrees_[i]) +
                                           " but chi(1) = " + rows_[i][0].to_string());
  }
  Int dsum = 0;
  for (Int d : degrees_) dsum = checked_add(dsum, checked_mul(d, d));
  if (dsum != g.order)
    throw ValidationError("degree sum",
                          "sum of squared degrees is " + std::to_string(dsum) + ", group order is " + std::to_string(g.order));

  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Rational ip = inner_product(rows_[i], rows_[j]);
      if (ip != Rational(i == j ? 1 : 0))
        throw ValidationError("row orthogonality",
                              pair_label(*this, i, j) + " = " + to_string(ip) + ", expected " + (i == j ? "1" : "0"));
    }
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t d = 0; d <= c; ++d) {
      CyclotomicInteger s(g.exponent);
      for (std::size_t i = 0; i < rows_.size(); ++i) s += rows_[i][c] * rows_[i][d].conj();
      const auto expected = c == d ? g.order / g.classes[c].size : 0;
      const auto got = s.as_rational_integer();
      if (!got || *got != expected || (c == d && g.order % g.classes[c].size != 0))
        throw ValidationError("column orthogonality", "columns " + g.classes[c].label + "," + g.classes[d].label +
                                                          " give " + s.to_string() + ", expected " +
                                                          std::to_string(expected));
    }
  for (std::size_t k = 1; k < e; ++k) {
    if (std::gcd(k, e) != 1) continue;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t c = 0; c < nc; ++c) {
        const auto pc = static_cast<std::size_t>(g.power_map[c][k]);
        if (!(rows_[i][pc] == rows_[i][c].galois(static_cast<Int>(k))))
          throw ValidationError("power map", "chi(g^" + std::to_string(k) + ") is not the Galois conjugate of chi(g) for " +
                                                 irreducible_name(i) + " on class " + g.classes[c].label);
      }
  }
  bool have_trivial = false;
  for (const auto& row : rows_) {
    bool all_one = true;
    for (const auto& v : row) all_one = all_one && v.as_rational_integer() == Int{1};
    have_trivial = have_trivial || all_one;
  }
  if (!have_trivial) throw ValidationError("trivial character", "no row is identically 1");
}

Rational CharacterTable::inner_product(const ClassFunction& f, const ClassFunction& h) const {
  if (f.size() != num_classes() || h.size() != num_classes())
    throw ValidationError("class function", "class function must have one value per class");
  CyclotomicInteger s(group_.exponent);
  for (std::size_t c = 0; c < num_classes(); ++c) s += (f[c] * h[c].conj()).scaled(group_.classes[c].size);
  const auto n = s.as_rational_integer();
  if (!n) throw ValidationError("non-rational inner product", "inner product " + s.to_string() + " is not rational");
  return Rational(*n) / Rational(group_.order);
}

std::vector<Int> CharacterTable::decompose_values(const ClassFunction& values) const {
  std::vector<Int> mults(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational m = inner_product(values, rows_[i]);
    if (boost::multiprecision::denominator(m) != 1)
      throw ValidationError("virtual character", "multiplicity of " + irreducible_name(i) + " (index " + std::to_string(i) +
                                                     ") is " + to_string(m) + ", not an integer");
    mults[i] = to_int_exact(m);
  }
  return mults;
}

void CharacterTable::precompute() {
  const std::size_t s = rows_.size();
  const std::size_t nc = num_classes();
  for (std::size_t i = 0; i < s; ++i) {
    bool all_one = true;
    for (const auto& v : rows_[i]) all_one = all_one && v.as_rational_integer() == Int{1};
    if (all_one) {
      trivial_ = i;
      break;
    }
  }
  structure_begin_.assign(s + 1, 0);
  for (std::size_t i = 0; i < s; ++i) {
    structure_begin_[i] = structure_.size();
    for (std::size_t j = 0; j < s; ++j) {
      ClassFunction pw;
      pw.reserve(nc);
      for (std::size_t c = 0; c < nc; ++c) pw.push_back(rows_[i][c] * rows_[j][c]);
      const auto m = decompose_values(pw);
      for (std::size_t k = 0; k < s; ++k)
        if (m[k] != 0)
          structure_.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                                static_cast<std::uint32_t>(k), m[k]});
    }
  }
  structure_begin_[s] = structure_.size();

  const auto e = static_cast<std::size_t>(group_.exponent);
  adams_.assign(e, {});
  for (std::size_t k = 0; k < e; ++k)
    for (std::size_t i = 0; i < s; ++i) {
      ClassFunction pw;
      pw.reserve(nc);
      for (std::size_t c = 0; c < nc; ++c) pw.push_back(rows_[i][static_cast<std::size_t>(group_.power_map[c][k])]);
      adams_[k].push_back(decompose_values(pw));
    }

  dual_.assign(s, 0);
  for (std::size_t i = 0; i < s; ++i) {
    ClassFunction cj;
    for (std::size_t c = 0; c < nc; ++c) cj.push_back(rows_[i][c].conj());
    const auto m = decompose_values(cj);
    const auto it = std::find(m.begin(), m.end(), 1);
    if (it == m.end() || std::accumulate(m.begin(), m.end(), Int{0}) != 1)
      throw ValidationError("duality", "dual of " + irreducible_name(i) + " is not irreducible");
    dual_[i] = static_cast<std::size_t>(it - m.begin());
  }
}

void CharacterTable::multiply_accumulate(const Int* a, const Int* b, Int* out) const {
  const std::size_t s = rows_.size();
  for (std::size_t i = 0; i < s; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t p = structure_begin_[i]; p < structure_begin_[i + 1]; ++p) {
      const auto& sc = structure_[p];
      if (b[sc.j] == 0) continue;
      out[sc.k] = checked_add(out[sc.k], checked_mul(checked_mul(a[i], b[sc.j]), sc.n));
    }
  }
}

void CharacterTable::multiply_accumulate_scaled(Int c, const Int* a, const Int* b, Int* out) const {
  if (c == 0) return;
  const std::size_t s = rows_.size();
  for (std::size_t i = 0; i < s; ++i) {
    if (a[i] == 0) continue;
    const Int ca = checked_mul(c, a[i]);
    for (std::size_t p = structure_begin_[i]; p < structure_begin_[i + 1]; ++p) {
      const auto& sc = structure_[p];
      if (b[sc.j] == 0) continue;
      out[sc.k] = checked_add(out[sc.k], checked_mul(checked_mul(ca, b[sc.j]), sc.n));
    }
  }
}

const std::vector<Int>& CharacterTable::adams_of_irreducible(Int k, std::size_t i) const {
  return adams_[static_cast<std::size_t>(mod_floor(k, group_.exponent))][i];
}

// ---------------------------------------------------------------------------

VirtualCharacter::VirtualCharacter(TablePtr table, std::vector<Int> mults)
    : table_(std::move(table)), mults_(std::move(mults)) {
  if (!table_) throw std::invalid_argument("virtual character needs a character table");
  if (mults_.size() != table_->size())
    throw std::invalid_argument("multiplicity vector has length " + std::to_string(mults_.size()) + ", table " +
                                table_->name() + " has " + std::to_string(table_->size()) + " irreducibles");
}

VirtualCharacter VirtualCharacter::zero(TablePtr table) {
  const auto s = table->size();
  return VirtualCharacter(std::move(table), std::vector<Int>(s, 0));
}

VirtualCharacter VirtualCharacter::trivial(TablePtr table) {
  const auto idx = table->trivial_index();
  return irreducible(std::move(table), idx);
}

VirtualCharacter VirtualCharacter::irreducible(TablePtr table, std::size_t i) {
  std::vector<Int> m(table->size(), 0);
  m.at(i) = 1;
  return VirtualCharacter(std::move(table), std::move(m));
}

Int VirtualCharacter::rank() const {
  Int r = 0;
  for (std::size_t i = 0; i < mults_.size(); ++i) r = checked_add(r, checked_mul(mults_[i], table_->degree(i)));
  return r;
}

bool VirtualCharacter::is_effective() const {
  return std::all_of(mults_.begin(), mults_.end(), [](Int m) { return m >= 0; });
}

bool VirtualCharacter::is_zero() const {
  return std::all_of(mults_.begin(), mults_.end(), [](Int m) { return m == 0; });
}

ClassFunction VirtualCharacter::values() const {
  ClassFunction out;
  out.reserve(table_->num_classes());
  for (std::size_t c = 0; c < table_->num_classes(); ++c) {
    CyclotomicInteger v(table_->exponent());
    for (std::size_t i = 0; i < mults_.size(); ++i)
      if (mults_[i] != 0) v += table_->value(i, c).scaled(mults_[i]);
    out.push_back(std::move(v));
  }
  return out;
}

void VirtualCharacter::require_same_table(const VirtualCharacter& o) const {
  if (table_ != o.table_) throw std::invalid_argument("virtual characters over different character tables");
}

VirtualCharacter& VirtualCharacter::operator+=(const VirtualCharacter& o) {
  require_same_table(o);
  for (std::size_t i = 0; i < mults_.size(); ++i) mults_[i] = checked_add(mults_[i], o.mults_[i]);
  return *this;
}

VirtualCharacter& VirtualCharacter::operator-=(const VirtualCharacter& o) {
  require_same_table(o);
  for (std::size_t i = 0; i < mults_.size(); ++i) mults_[i] = checked_sub(mults_[i], o.mults_[i]);
  return *this;
}

VirtualCharacter VirtualCharacter::operator-() const { return -1 * *this; }

VirtualCharacter operator*(Int c, const VirtualCharacter& a) {
  VirtualCharacter out = a;
  for (auto& m : out.mults_) m = checked_mul(m, c);
  return out;
}

VirtualCharacter operator*(const VirtualCharacter& a, const VirtualCharacter& b) { return product(a, b); }

bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
  return a.table_ == b.table_ && a.mults_ == b.mults_;
}

std::string VirtualCharacter::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < mults_.size(); ++i) {
    Int m = mults_[i];
    if (m == 0) continue;
    if (m < 0) {
      os << '-';
      m = -m;
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (m != 1) os << m;
    os << table_->irreducible_name(i);
  }
  if (first) os << '0';
  return os.str();
}

std::string VirtualCharacter::to_csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < mults_.size(); ++i) os << (i ? "," : "") << mults_[i];
  return os.str();
}

// ---------------------------------------------------------------------------

VirtualCharacter decompose(const TablePtr& table, const ClassFunction& values) {
  return VirtualCharacter(table, table->decompose_values(values));
}

VirtualCharacter product(const VirtualCharacter& a, const VirtualCharacter& b) {
  if (a.table() != b.table()) throw std::invalid_argument("product: character table mismatch");
  std::vector<Int> out(a.table()->size(), 0);
  a.table()->multiply_accumulate(a.mults().data(), b.mults().data(), out.data());
  return VirtualCharacter(a.table(), std::move(out));
}

VirtualCharacter product_via_values(const VirtualCharacter& a, const VirtualCharacter& b) {
  if (a.table() != b.table()) throw std::invalid_argument("product: character table mismatch");
  auto va = a.values();
  const auto vb = b.values();
  for (std::size_t c = 0; c < va.size(); ++c) va[c] = va[c] * vb[c];
  return decompose(a.table(), va);
}

VirtualCharacter adams(Int k, const VirtualCharacter& a) {
  const auto& t = *a.table();
  std::vector<Int> out(t.size(), 0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (a[i] == 0) continue;
    const auto& psi = t.adams_of_irreducible(k, i);
    for (std::size_t j = 0; j < t.size(); ++j) out[j] = checked_add(out[j], checked_mul(a[i], psi[j]));
  }
  return VirtualCharacter(a.table(), std::move(out));
}

VirtualCharacter adams_via_values(Int k, const VirtualCharacter& a) {
  const auto& t = *a.table();
  const auto vals = a.values();
  ClassFunction out;
  for (std::size_t c = 0; c < t.num_classes(); ++c)
    out.push_back(vals[static_cast<std::size_t>(t.group().power_class(c, k))]);
  return decompose(a.table(), out);
}

std::vector<VirtualCharacter> lambda_series(const VirtualCharacter& a, Int max_k) {
  if (max_k < 0) throw std::invalid_argument("lambda: degree must be non-negative");
  std::vector<VirtualCharacter> lam{VirtualCharacter::trivial(a.table())};
  std::vector<VirtualCharacter> psi;
  for (Int n = 1; n <= max_k; ++n) {
    psi.push_back(adams(n, a));
    auto acc = VirtualCharacter::zero(a.table());
    for (Int i = 1; i <= n; ++i) {
      auto term = product(psi[static_cast<std::size_t>(i - 1)], lam[static_cast<std::size_t>(n - i)]);
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    std::vector<Int> m = acc.mults();
    for (auto& v : m) {
      if (v % n != 0)
        throw ArithmeticError("Newton identity: division by " + std::to_string(n) + " is not exact for lambda^" +
                              std::to_string(n) + "(" + a.to_string() + ")");
      v /= n;
    }
    lam.emplace_back(a.table(), std::move(m));
  }
  return lam;
}

VirtualCharacter lambda_op(Int k, const VirtualCharacter& a) { return lambda_series(a, k).back(); }

VirtualCharacter dual(const VirtualCharacter& a) {
  const auto& t = *a.table();
  std::vector<Int> out(t.size(), 0);
  for (std::size_t i = 0; i < t.size(); ++i) out[t.dual_index(i)] = a[i];
  return VirtualCharacter(a.table(), std::move(out));
}

VirtualCharacter regular_rep(const TablePtr& table) { return VirtualCharacter(table, table->degrees()); }

VirtualCharacter augmentation_ideal(const TablePtr& table) {
  return regular_rep(table) - VirtualCharacter::trivial(table);
}

RegularEmbedding embed_in_regular(const VirtualCharacter& a) {
  if (!a.is_effective()) throw std::invalid_argument("embed_in_regular: class " + a.to_string() + " is not effective");
  const auto& t = *a.table();
  Int n = 0;
  for (std::size_t i = 0; i < t.size(); ++i) n = std::max(n, (a[i] + t.degree(i) - 1) / t.degree(i));
  return {n, n * regular_rep(a.table()) - a};
}

VirtualCharacter parse_class_vector(const TablePtr& table, const std::string& csv) {
  std::vector<Int> m;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad multiplicity '" + item + "' in class vector '" + csv + "'");
    }
    if (used != item.size() && item.find_first_not_of(" \t", used) != std::string::npos)
      throw std::invalid_argument("bad multiplicity '" + item + "' in class vector '" + csv + "'");
    m.push_back(v);
  }
  if (m.size() != table->size())
    throw std::invalid_argument("class vector '" + csv + "' has " + std::to_string(m.size()) + " entries, group " +
                                table->name() + " has " + std::to_string(table->size()) + " irreducibles");
  return VirtualCharacter(table, std::move(m));
}

}  // namespace kzero
