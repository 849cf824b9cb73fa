#pragma once

#include "sdyn/bigfloat.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace sdyn {

using Rational = mpq_class;

/// Exponent vector with trailing zeros trimmed, so the same monomial has one
/// representation regardless of how many coordinates the ambient ring has.
using Monomial = std::vector<std::uint32_t>;

/// Lexicographic order x0 > x1 > ... ; the greatest monomial comes first.
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over the rationals in coordinates x0, x1, ...
///
/// Terms are kept in lexicographic order (leading term first) and zero
/// coefficients are never stored, so structural equality is value equality.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, LexGreater>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT

  static Polynomial variable(int index);
  static Polynomial monomial(Monomial exponents, const Rational& coefficient);
  /// a0*x0 + a1*x1 + ... + constant
  static Polynomial affine(std::span<const Rational> linear, const Rational& constant);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Value of a constant polynomial (zero for the zero polynomial).
  Rational constant_value() const;

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  /// Highest coordinate index that occurs, or -1 for constants.
  int max_variable() const;
  int degree_in(int var) const;
  /// Coefficient of x_var^k, as a polynomial free of x_var.
  Polynomial coefficient_in(int var, std::uint32_t k) const;

  Polynomial derivative(int var) const;

  Rational evaluate(std::span<const Rational> point) const;
  BigFloat evaluate(std::span<const BigFloat> point, int precision_bits) const;

  /// Scaled so the leading coefficient is 1; zero stays zero.
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Human readable form, e.g. "x0^2*x1 - 3/2*x2 + 1". Parsed back by parse().
  std::string to_string() const;
  static Polynomial parse(const std::string& text);

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

/// Quotient of an exact division; throws std::domain_error when b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (recursive primitive remainder sequence).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace sdyn
