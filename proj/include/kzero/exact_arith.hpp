#pragma once

/**
 * @file exact_arith.hpp
 * @brief Exact integers, rationals and cyclotomic integers.
 *
 * Cyclotomic integers are stored as representatives in Z[x]/(x^e - 1).
 * Equality and rationality tests go through a canonical reduction modulo
 * the e-th cyclotomic polynomial, so two representatives of the same
 * element of Z[zeta_e] compare equal.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kzero {

using Int = std::int64_t;
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("integer overflow in multiplication");
  return r;
}

/// Mathematical modulus; result in [0, m).
inline Int mod_floor(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

/// Integer polynomial helpers, coefficient of x^k at index k.
namespace intpoly {

/// Drops trailing zero coefficients; the zero polynomial becomes empty.
void trim(std::vector<Int>& p);

/// Exact division by a monic divisor; throws if the remainder is nonzero.
std::vector<Int> divide_exact(std::vector<Int> dividend, std::span<const Int> monic_divisor);

/// Remainder modulo a monic polynomial, padded to deg(divisor) entries.
std::vector<Int> remainder(std::vector<Int> p, std::span<const Int> monic_divisor);

}  // namespace intpoly

/// The e-th cyclotomic polynomial, computed once per order and cached.
const std::vector<Int>& cyclotomic_polynomial(int e);

/// Euler phi, i.e. the degree of the e-th cyclotomic polynomial.
int euler_phi(int e);

class CyclotomicInteger {
 public:
  /// The zero element of Z[zeta_e].
  explicit CyclotomicInteger(int order);
  CyclotomicInteger(int order, std::vector<Int> coeffs);

  static CyclotomicInteger constant(int order, Int value);
  /// zeta_e^(k mod e).
  static CyclotomicInteger root(int order, Int k);

  int order() const { return order_; }
  std::span<const Int> coeffs() const { return coeffs_; }

  /// Residue modulo the e-th cyclotomic polynomial, length phi(e).
  std::vector<Int> canonical() const;

  bool is_zero() const;
  std::optional<Int> as_rational_integer() const;

  CyclotomicInteger conj() const;

  CyclotomicInteger& operator+=(const CyclotomicInteger& o);
  CyclotomicInteger& operator-=(const CyclotomicInteger& o);
  CyclotomicInteger operator-() const;
  CyclotomicInteger scaled(Int c) const;

  friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
  friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }
  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b);
  friend bool operator==(const CyclotomicInteger& a, const CyclotomicInteger& b);

  /// Galois action zeta -> zeta^k, k coprime to the order.
  CyclotomicInteger galois(Int k) const;

  /// Short human form, e.g. "1+z^2-2z".
  std::string to_string() const;

 private:
  void require_same_order(const CyclotomicInteger& o) const;

  int order_;
  std::vector<Int> coeffs_;
};

/// Free-function spellings of the basic operations.
inline CyclotomicInteger cyclo_root(int e, Int k) { return CyclotomicInteger::root(e, k); }
CyclotomicInteger cyclo_mul(const CyclotomicInteger& a, const CyclotomicInteger& b);
inline CyclotomicInteger cyclo_conj(const CyclotomicInteger& a) { return a.conj(); }
inline std::optional<Int> cyclo_is_rational_integer(const CyclotomicInteger& a) {
  return a.as_rational_integer();
}

/// Parses "1+z^2-2z", "3", "-z" into an element of order e.
CyclotomicInteger parse_cyclotomic(int order, const std::string& text);

/// Rational helpers.
std::string to_string(const Rational& q);
Int to_int_exact(const Rational& q);

}  // namespace kzero
