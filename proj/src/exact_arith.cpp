#include "kzero/exact_arith.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace kzero {

namespace intpoly {

void trim(std::vector<Int>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Int> divide_exact(std::vector<Int> dividend, std::span<const Int> monic_divisor) {
  trim(dividend);
  const std::size_t dd = monic_divisor.size() - 1;
  if (monic_divisor.back() != 1) throw ArithmeticError("divisor is not monic");
  if (dividend.size() <= dd) {
    if (!dividend.empty()) throw ArithmeticError("inexact polynomial division");
    return {};
  }
  std::vector<Int> quotient(dividend.size() - dd, 0);
  for (std::size_t k = dividend.size(); k-- > dd;) {
    const Int c = dividend[k];
    if (c == 0) continue;
    quotient[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j)
      dividend[k - dd + j] = checked_sub(dividend[k - dd + j], checked_mul(c, monic_divisor[j]));
  }
  trim(dividend);
  if (!dividend.empty()) throw ArithmeticError("inexact polynomial division");
  return quotient;
}

std::vector<Int> remainder(std::vector<Int> p, std::span<const Int> monic_divisor) {
  const std::size_t dd = monic_divisor.size() - 1;
  for (std::size_t k = p.size(); k-- > dd;) {
    const Int c = p[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j)
      p[k - dd + j] = checked_sub(p[k - dd + j], checked_mul(c, monic_divisor[j]));
  }
  p.resize(dd, 0);
  return p;
}

}  // namespace intpoly

const std::vector<Int>& cyclotomic_polynomial(int e) {
  if (e < 1) throw std::invalid_argument("cyclotomic polynomial order must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<Int>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(e); it != cache.end()) return it->second;
  }
  // x^e - 1 divided by Phi_d for every proper divisor d.
  std::vector<Int> p(static_cast<std::size_t>(e) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(e)] = 1;
  for (int d = 1; d < e; ++d) {
    if (e % d != 0) continue;
    p = intpoly::divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  return cache.emplace(e, std::move(p)).first->second;
}

int euler_phi(int e) {
  int count = 0;
  for (int k = 1; k <= e; ++k)
    if (std::gcd(k, e) == 1) ++count;
  return count;
}

CyclotomicInteger::CyclotomicInteger(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  coeffs_.assign(static_cast<std::size_t>(order), 0);
}

CyclotomicInteger::CyclotomicInteger(int order, std::vector<Int> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  if (coeffs_.size() != static_cast<std::size_t>(order))
    throw std::invalid_argument("cyclotomic coefficient vector must have exactly e entries");
}

CyclotomicInteger CyclotomicInteger::constant(int order, Int value) {
  CyclotomicInteger c(order);
  c.coeffs_[0] = value;
  return c;
}

CyclotomicInteger CyclotomicInteger::root(int order, Int k) {
  if (order < 1) throw std::invalid_argument("cyclo_root: order must be positive");
  CyclotomicInteger c(order);
  c.coeffs_[static_cast<std::size_t>(mod_floor(k, order))] = 1;
  return c;
}

std::vector<Int> CyclotomicInteger::canonical() const {
  return intpoly::remainder(coeffs_, cyclotomic_polynomial(order_));
}

bool CyclotomicInteger::is_zero() const {
  for (Int v : canonical())
    if (v != 0) return false;
  return true;
}

std::optional<Int> CyclotomicInteger::as_rational_integer() const {
  const auto c = canonical();
  for (std::size_t k = 1; k < c.size(); ++k)
    if (c[k] != 0) return std::nullopt;
  return c.empty() ? 0 : c[0];
}

CyclotomicInteger CyclotomicInteger::conj() const { return galois(-1); }

CyclotomicInteger CyclotomicInteger::galois(Int k) const {
  CyclotomicInteger out(order_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const auto idx = static_cast<std::size_t>(mod_floor(checked_mul(static_cast<Int>(j), k), order_));
    out.coeffs_[idx] = checked_add(out.coeffs_[idx], coeffs_[j]);
  }
  return out;
}

void CyclotomicInteger::require_same_order(const CyclotomicInteger& o) const {
  if (order_ != o.order_)
    throw std::invalid_argument("cyclotomic order mismatch: " + std::to_string(order_) + " vs " +
                                std::to_string(o.order_));
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& o) {
  require_same_order(o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] = checked_add(coeffs_[j], o.coeffs_[j]);
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& o) {
  require_same_order(o);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] = checked_sub(coeffs_[j], o.coeffs_[j]);
  return *this;
}

CyclotomicInteger CyclotomicInteger::operator-() const { return scaled(-1); }

CyclotomicInteger CyclotomicInteger::scaled(Int c) const {
  CyclotomicInteger out(order_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) out.coeffs_[j] = checked_mul(coeffs_[j], c);
  return out;
}

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  a.require_same_order(b);
  const auto e = static_cast<std::size_t>(a.order_);
  CyclotomicInteger out(a.order_);
  for (std::size_t i = 0; i < e; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < e; ++j) {
      if (b.coeffs_[j] == 0) continue;
      const std::size_t k = (i + j) % e;
      out.coeffs_[k] = checked_add(out.coeffs_[k], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return out;
}

bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  if (a.order_ != b.order_) return false;
  return a.canonical() == b.canonical();
}

CyclotomicInteger cyclo_mul(const CyclotomicInteger& a, const CyclotomicInteger& b) { return a * b; }

std::string CyclotomicInteger::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    Int c = coeffs_[k];
    if (c == 0) continue;
    if (c < 0) {
      os << '-';
      c = -c;
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (k == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'z';
    if (k > 1) os << '^' << k;
  }
  if (first) os << '0';
  return os.str();
}

CyclotomicInteger parse_cyclotomic(int order, const std::string& text) {
  std::vector<Int> coeffs(static_cast<std::size_t>(order), 0);
  std::size_t pos = 0;
  auto fail = [&]() -> void {
    throw std::invalid_argument("cannot parse cyclotomic integer '" + text + "'");
  };
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) fail();
  while (pos < s.size()) {
    Int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    }
    Int coef = 1;
    bool have_digits = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coef = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coef = checked_add(checked_mul(coef, 10), s[pos] - '0');
        ++pos;
        have_digits = true;
      }
    }
    if (pos < s.size() && s[pos] == '*') ++pos;
    Int power = 0;
    if (pos < s.size() && s[pos] == 'z') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        Int psign = 1;
        if (pos < s.size() && s[pos] == '-') {
          psign = -1;
          ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail();
        power = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          power = checked_add(checked_mul(power, 10), s[pos] - '0');
          ++pos;
        }
        power *= psign;
      }
    } else if (!have_digits) {
      fail();
    }
    const auto idx = static_cast<std::size_t>(mod_floor(power, order));
    coeffs[idx] = checked_add(coeffs[idx], checked_mul(sign, coef));
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') fail();
  }
  return CyclotomicInteger(order, std::move(coeffs));
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(q);
  if (boost::multiprecision::denominator(q) != 1) os << '/' << boost::multiprecision::denominator(q);
  return os.str();
}

Int to_int_exact(const Rational& q) {
  if (boost::multiprecision::denominator(q) != 1) throw ArithmeticError("rational " + to_string(q) + " is not an integer");
  const BigInt n = boost::multiprecision::numerator(q);
  if (n > std::numeric_limits<Int>::max() || n < std::numeric_limits<Int>::min())
    throw ArithmeticError("integer out of 64-bit range");
  return static_cast<Int>(n);
}

}  // namespace kzero
