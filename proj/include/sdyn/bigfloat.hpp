#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <iosfwd>
#include <string>

namespace sdyn {

/// Binary floating point number of runtime-chosen precision backed by MPFR.
///
/// Results of binary operations carry the larger of the operand precisions.
/// Every operation rounds to nearest.
class BigFloat {
 public:
  static constexpr int kDefaultPrecision = 64;

  explicit BigFloat(int precision_bits = kDefaultPrecision);
  BigFloat(double value, int precision_bits);
  BigFloat(const mpq_class& value, int precision_bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  int precision() const noexcept { return static_cast<int>(mpfr_get_prec(value_)); }

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  friend BigFloat operator+(BigFloat lhs, const BigFloat& rhs) { return lhs += rhs; }
  friend BigFloat operator-(BigFloat lhs, const BigFloat& rhs) { return lhs -= rhs; }
  friend BigFloat operator*(BigFloat lhs, const BigFloat& rhs) { return lhs *= rhs; }
  friend BigFloat operator/(BigFloat lhs, const BigFloat& rhs) { return lhs /= rhs; }
  BigFloat operator-() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits = 20) const;

  BigFloat pow(unsigned long exponent) const;

  friend BigFloat abs(const BigFloat& x);
  friend BigFloat exp(const BigFloat& x);
  friend BigFloat coth(const BigFloat& x);

  mpfr_srcptr raw() const { return value_; }

 private:
  mpfr_t value_;
};

BigFloat abs(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat coth(const BigFloat& x);

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

}  // namespace sdyn
