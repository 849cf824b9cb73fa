#include "sdyn/rational_function.hpp"

#include "sdyn/errors.hpp"

#include <stdexcept>

namespace sdyn {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  const Rational lead = den_.leading_coefficient();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::constant_value() const {
  return num_.constant_value() / den_.constant_value();
}

RationalFunction RationalFunction::derivative(int var) const {
  if (den_.is_constant()) {
    RationalFunction out;
    out.num_ = num_.derivative(var) * (1 / den_.constant_value());
    return out;
  }
  // (n/d)' = (n' d - n d') / d^2
  return RationalFunction(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) {
    throw PoleError("denominator " + den_.to_string() + " vanishes", den_.to_string());
  }
  Rational out = num_.evaluate(point) / d;
  return out;
}

BigFloat RationalFunction::evaluate(std::span<const BigFloat> point, int precision_bits,
                                    double margin) const {
  BigFloat d = den_.evaluate(point, precision_bits);
  if (abs(d) < BigFloat(margin, precision_bits)) {
    throw PoleError("denominator " + den_.to_string() + " within pole margin", den_.to_string());
  }
  return num_.evaluate(point, precision_bits) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else if (den_.is_constant() && rhs.den_.is_constant()) {
    num_ = num_ * (1 / den_.constant_value()) + rhs.num_ * (1 / rhs.den_.constant_value());
    den_ = Polynomial(1);
  } else {
    Polynomial g = gcd(den_, rhs.den_);
    Polynomial a = divide_exact(den_, g);
    Polynomial b = divide_exact(rhs.den_, g);
    num_ = num_ * b + rhs.num_ * a;
    den_ = a * rhs.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) { return *this += -rhs; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = RationalFunction();
  // Cross-cancel first so the products stay small.
  Polynomial g1 = gcd(num_, rhs.den_);
  Polynomial g2 = gcd(rhs.num_, den_);
  Polynomial n = divide_exact(num_, g1) * divide_exact(rhs.num_, g2);
  Polynomial d = divide_exact(den_, g2) * divide_exact(rhs.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  const Rational lead = den_.leading_coefficient();
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by the zero rational function");
  return *this *= RationalFunction(rhs.den_, rhs.num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out(*this);
  out.num_ = -out.num_;
  return out;
}

std::string RationalFunction::to_string() const {
  if (den_ == Polynomial(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace sdyn
