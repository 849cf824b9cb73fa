#pragma once

#include "sdyn/polynomial.hpp"

#include <algorithm>
#include <span>
#include <string>

namespace sdyn {

/// Quotient of polynomials kept in canonical form: numerator and denominator
/// are coprime and the denominator is monic. Zero is 0/1. Two rational
/// functions are equal iff their canonical forms are identical.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when `den` is the zero polynomial.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;
  int max_variable() const { return std::max(num_.max_variable(), den_.max_variable()); }

  RationalFunction derivative(int var) const;

  /// Throws PoleError when the denominator vanishes at `point`.
  Rational evaluate(std::span<const Rational> point) const;
  /// Throws PoleError when |denominator| < margin at `point`.
  BigFloat evaluate(std::span<const BigFloat> point, int precision_bits, double margin) const;

  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace sdyn
