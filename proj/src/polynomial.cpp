#include "sdyn/polynomial.hpp"

#include "sdyn/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace sdyn {

namespace {

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

bool divides(const Monomial& d, const Monomial& m) {
  if (d.size() > m.size()) return false;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

Monomial quotient(const Monomial& m, const Monomial& d) {
  Monomial out(m);
  for (std::size_t i = 0; i < d.size(); ++i) out[i] -= d[i];
  trim(out);
  return out;
}

std::uint32_t exponent(const Monomial& m, int var) {
  return static_cast<std::size_t>(var) < m.size() ? m[static_cast<std::size_t>(var)] : 0;
}

}  // namespace

bool LexGreater::operator()(const Monomial& a, const Monomial& b) const {
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t ea = i < a.size() ? a[i] : 0;
    std::uint32_t eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

Polynomial::Polynomial(const Rational& constant) {
  Rational c = constant;
  c.canonicalize();
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::variable(int index) {
  Monomial m(static_cast<std::size_t>(index) + 1, 0);
  m.back() = 1;
  return monomial(std::move(m), Rational(1));
}

Polynomial Polynomial::monomial(Monomial exponents, const Rational& coefficient) {
  Polynomial p;
  trim(exponents);
  Rational c = coefficient;
  c.canonicalize();
  if (c != 0) p.terms_.emplace(std::move(exponents), c);
  return p;
}

Polynomial Polynomial::affine(std::span<const Rational> linear, const Rational& constant) {
  Polynomial p(constant);
  for (std::size_t i = 0; i < linear.size(); ++i) {
    if (linear[i] != 0) p += variable(static_cast<int>(i)) * linear[i];
  }
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constant_value() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::max_variable() const {
  int out = -1;
  for (const auto& [m, c] : terms_) out = std::max(out, static_cast<int>(m.size()) - 1);
  return out;
}

int Polynomial::degree_in(int var) const {
  int out = 0;
  for (const auto& [m, c] : terms_) out = std::max(out, static_cast<int>(exponent(m, var)));
  return out;
}

Polynomial Polynomial::coefficient_in(int var, std::uint32_t k) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    if (exponent(m, var) != k) continue;
    Monomial r(m);
    if (static_cast<std::size_t>(var) < r.size()) r[static_cast<std::size_t>(var)] = 0;
    trim(r);
    out.terms_.emplace(std::move(r), c);
  }
  return out;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    std::uint32_t e = exponent(m, var);
    if (e == 0) continue;
    Monomial r(m);
    r[static_cast<std::size_t>(var)] -= 1;
    trim(r);
    out.add_term(r, c * e);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational term(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (i >= point.size()) throw std::out_of_range("polynomial evaluated at a point of too low dimension");
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), point[i].get_num_mpz_t(), m[i]);
      mpz_pow_ui(den.get_mpz_t(), point[i].get_den_mpz_t(), m[i]);
      term *= Rational(num, den);
    }
    total += term;
  }
  total.canonicalize();
  return total;
}

BigFloat Polynomial::evaluate(std::span<const BigFloat> point, int precision_bits) const {
  BigFloat total(precision_bits);
  for (const auto& [m, c] : terms_) {
    BigFloat term(c, precision_bits);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (i >= point.size()) throw std::out_of_range("polynomial evaluated at a point of too low dimension");
      term *= point[i].pow(m[i]);
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coefficient() == 1) return *this;
  Rational inv = 1 / leading_coefficient();
  return *this * inv;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  Rational cc = c;
  cc.canonicalize();
  auto [it, inserted] = terms_.try_emplace(m, cc);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= rhs;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_vars = !m.empty();
    if (!has_vars || mag != 1) {
      os << mag.get_str();
      if (has_vars) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << "x" << i;
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

namespace {

// Recursive-descent parser for polynomial text: + - * / ^ ( ), integers and
// variables x<k>. Division is only allowed by nonzero constants.
class PolynomialParser {
 public:
  explicit PolynomialParser(const std::string& text) : text_(text) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial \"" + text_ + "\": " + why + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  Polynomial expression() {
    Polynomial p = term();
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = unary();
    for (;;) {
      if (accept('*')) {
        p *= unary();
      } else if (accept('/')) {
        Polynomial d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        p *= Rational(1) / d.constant_value();
      } else {
        return p;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      unsigned long e = std::stoul(digits());
      Polynomial out(1);
      for (unsigned long i = 0; i < e; ++i) out *= base;
      return out;
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial p = expression();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (ch == 'x') {
      ++pos_;
      return Polynomial::variable(std::stoi(digits()));
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return Polynomial(Rational(mpz_class(digits())));
    fail(std::string("unexpected character '") + ch + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text) { return PolynomialParser(text).parse(); }

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  Polynomial q;
  Polynomial r(a);
  const Monomial& lb = b.leading_monomial();
  const Rational& cb = b.leading_coefficient();
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!divides(lb, lr)) throw std::domain_error("polynomial division is not exact");
    Polynomial t = Polynomial::monomial(quotient(lr, lb), r.leading_coefficient() / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b);

// gcd of the coefficients of p viewed as a polynomial in x_var.
Polynomial content(const Polynomial& p, int var) {
  int deg = p.degree_in(var);
  Polynomial g;
  for (int k = deg; k >= 0; --k) {
    Polynomial c = p.coefficient_in(var, static_cast<std::uint32_t>(k));
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd_recursive(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

Polynomial primitive_part(const Polynomial& p, int var) {
  return divide_exact(p, content(p, var)).monic();
}

// Pseudo-remainder of a by b with respect to x_var.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, int var) {
  int db = b.degree_in(var);
  Polynomial lcb = b.coefficient_in(var, static_cast<std::uint32_t>(db));
  Polynomial r(a);
  while (!r.is_zero()) {
    int dr = r.degree_in(var);
    if (dr < db) break;
    Polynomial lcr = r.coefficient_in(var, static_cast<std::uint32_t>(dr));
    Monomial shift(static_cast<std::size_t>(var) + 1, 0);
    shift.back() = static_cast<std::uint32_t>(dr - db);
    r = lcb * r - lcr * Polynomial::monomial(shift, Rational(1)) * b;
  }
  return r;
}

Polynomial gcd_recursive(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a == b) return a.monic();

  int var = std::max(a.max_variable(), b.max_variable());
  Polynomial ca = content(a, var);
  Polynomial cb = content(b, var);
  Polynomial c = gcd_recursive(ca, cb);

  Polynomial pa = divide_exact(a, ca).monic();
  Polynomial pb = divide_exact(b, cb).monic();
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    if (pb.degree_in(var) == 0) {
      pa = Polynomial(1);
      break;
    }
    Polynomial r = pseudo_remainder(pa, pb, var);
    pa = std::move(pb);
    pb = r.is_zero() ? r : primitive_part(r, var);
  }
  return (c * pa).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) { return gcd_recursive(a, b); }

}  // namespace sdyn
