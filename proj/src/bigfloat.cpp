#include "sdyn/bigfloat.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

namespace sdyn {

namespace {

mpfr_prec_t wider(mpfr_srcptr a, mpfr_srcptr b) {
  return std::max(mpfr_get_prec(a), mpfr_get_prec(b));
}

}  // namespace

BigFloat::BigFloat(int precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, int precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, int precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // Steal the limbs and leave `other` as a valid 2-bit zero.
  value_[0] = other.value_[0];
  mpfr_init2(other.value_, MPFR_PREC_MIN);
  mpfr_set_zero(other.value_, 1);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  mpfr_prec_t p = wider(value_, rhs.value_);
  if (p != mpfr_get_prec(value_)) mpfr_prec_round(value_, p, MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  mpfr_prec_t p = wider(value_, rhs.value_);
  if (p != mpfr_get_prec(value_)) mpfr_prec_round(value_, p, MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  mpfr_prec_t p = wider(value_, rhs.value_);
  if (p != mpfr_get_prec(value_)) mpfr_prec_round(value_, p, MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  mpfr_prec_t p = wider(value_, rhs.value_);
  if (p != mpfr_get_prec(value_)) mpfr_prec_round(value_, p, MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::pow(unsigned long exponent) const {
  BigFloat out(precision());
  mpfr_pow_ui(out.value_, value_, exponent, MPFR_RNDN);
  return out;
}

BigFloat abs(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_abs(out.value_, x.value_, MPFR_RNDN);
  return out;
}

BigFloat exp(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_exp(out.value_, x.value_, MPFR_RNDN);
  return out;
}

BigFloat coth(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_coth(out.value_, x.value_, MPFR_RNDN);
  return out;
}

std::string BigFloat::to_string(int digits) const {
  int n = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, value_);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, value_);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
  return os << x.to_string(static_cast<int>(os.precision()));
}

}  // namespace sdyn
