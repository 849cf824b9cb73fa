#include "sdyn/scalar_expr.hpp"

#include "sdyn/errors.hpp"
#include "sdyn/sampling.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace sdyn {

namespace {

int compare(const CothArgument& a, const CothArgument& b) {
  std::size_t n = std::max(a.linear.size(), b.linear.size());
  for (std::size_t i = 0; i < n; ++i) {
    Rational x = i < a.linear.size() ? a.linear[i] : Rational(0);
    Rational y = i < b.linear.size() ? b.linear[i] : Rational(0);
    if (x != y) return x < y ? -1 : 1;
  }
  if (a.constant != b.constant) return a.constant < b.constant ? -1 : 1;
  return 0;
}

ScalarExpr::AtomMonomial multiply(const ScalarExpr::AtomMonomial& a,
                                  const ScalarExpr::AtomMonomial& b) {
  ScalarExpr::AtomMonomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->argument < j->argument)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->argument < i->argument) {
      out.push_back(*j++);
    } else {
      out.push_back({i->argument, i->power + j->power});
      ++i;
      ++j;
    }
  }
  return out;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

Polynomial CothArgument::as_polynomial() const { return Polynomial::affine(linear, constant); }

std::string CothArgument::to_string() const { return as_polynomial().to_string(); }

bool operator<(const CothArgument& a, const CothArgument& b) { return compare(a, b) < 0; }

const char* to_string(ZeroStatus status) {
  switch (status) {
    case ZeroStatus::exact_zero:
      return "exact-zero";
    case ZeroStatus::probably_zero:
      return "numeric-zero";
    case ZeroStatus::nonzero:
      return "nonzero";
  }
  return "unknown";
}

bool ScalarExpr::MonomialLess::operator()(const AtomMonomial& a, const AtomMonomial& b) const {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare(a[i].argument, b[i].argument);
    if (c != 0) return c < 0;
    if (a[i].power != b[i].power) return a[i].power < b[i].power;
  }
  return a.size() < b.size();
}

ScalarExpr::ScalarExpr(RationalFunction f) {
  if (!f.is_zero()) terms_.emplace(AtomMonomial{}, std::move(f));
}

ScalarExpr ScalarExpr::variable(int index) { return ScalarExpr(RationalFunction(Polynomial::variable(index))); }

ScalarExpr ScalarExpr::coth(std::vector<Rational> linear, const Rational& constant) {
  while (!linear.empty() && linear.back() == 0) linear.pop_back();
  CothArgument arg{std::move(linear), constant};
  int sign = 0;
  for (const auto& c : arg.linear) {
    if (c != 0) {
      sign = c > 0 ? 1 : -1;
      break;
    }
  }
  if (sign == 0) sign = sgn(arg.constant);
  if (sign == 0) throw PoleError("coth of the zero form", "0");
  if (sign < 0) {
    for (auto& c : arg.linear) c = -c;
    arg.constant = -arg.constant;
  }
  ScalarExpr out;
  out.terms_.emplace(AtomMonomial{{std::move(arg), 1}}, RationalFunction(Rational(sign)));
  return out;
}

bool ScalarExpr::has_coth() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return !t.first.empty(); });
}

std::optional<RationalFunction> ScalarExpr::as_rational() const {
  if (terms_.empty()) return RationalFunction();
  if (has_coth()) return std::nullopt;
  return terms_.begin()->second;
}

int ScalarExpr::max_variable() const {
  int out = -1;
  for (const auto& [m, c] : terms_) {
    out = std::max(out, c.max_variable());
    for (const auto& ap : m) out = std::max(out, static_cast<int>(ap.argument.linear.size()) - 1);
  }
  return out;
}

std::vector<CothArgument> ScalarExpr::atoms() const {
  std::vector<CothArgument> out;
  for (const auto& [m, c] : terms_)
    for (const auto& ap : m)
      if (std::find(out.begin(), out.end(), ap.argument) == out.end()) out.push_back(ap.argument);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Polynomial> ScalarExpr::singular_forms() const {
  std::vector<Polynomial> out;
  auto push = [&out](Polynomial p) {
    if (p.is_constant()) return;
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  };
  for (const auto& [m, c] : terms_) {
    push(c.denominator());
    for (const auto& ap : m) push(ap.argument.as_polynomial());
  }
  return out;
}

void ScalarExpr::add_term(const AtomMonomial& m, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ScalarExpr& ScalarExpr::operator+=(const ScalarExpr& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

ScalarExpr& ScalarExpr::operator-=(const ScalarExpr& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
  ScalarExpr out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
  return out;
}

ScalarExpr& ScalarExpr::operator*=(const ScalarExpr& rhs) {
  *this = *this * rhs;
  return *this;
}

ScalarExpr ScalarExpr::operator-() const {
  ScalarExpr out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

ScalarExpr ScalarExpr::differentiate(int var) const {
  ScalarExpr out;
  for (const auto& [m, c] : terms_) {
    out.add_term(m, c.derivative(var));
    for (std::size_t k = 0; k < m.size(); ++k) {
      const CothArgument& arg = m[k].argument;
      Rational slope = static_cast<std::size_t>(var) < arg.linear.size()
                           ? arg.linear[static_cast<std::size_t>(var)]
                           : Rational(0);
      if (slope == 0) continue;
      // d/dx coth(u)^p = p * u_x * (1 - coth(u)^2) * coth(u)^(p-1)
      AtomMonomial lowered(m);
      if (--lowered[k].power == 0) lowered.erase(lowered.begin() + static_cast<std::ptrdiff_t>(k));
      ScalarExpr rest;
      rest.terms_.emplace(lowered, c * RationalFunction(slope * m[k].power));
      ScalarExpr atom;
      atom.terms_.emplace(AtomMonomial{{arg, 1}}, RationalFunction(1));
      out += rest * (ScalarExpr(1) - atom * atom);
    }
  }
  return out;
}

Rational ScalarExpr::eval_exact(std::span<const Rational> point) const {
  if (has_coth()) throw NotRationalError("expression contains a coth atom: " + to_sexpr());
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second.evaluate(point);
}

BigFloat ScalarExpr::eval_numeric(std::span<const BigFloat> point, int precision_bits,
                                  double margin) const {
  BigFloat total(precision_bits);
  const BigFloat margin_f(margin, precision_bits);
  std::map<CothArgument, BigFloat> cache;
  for (const auto& [m, c] : terms_) {
    BigFloat term = c.evaluate(point, precision_bits, margin);
    for (const auto& ap : m) {
      auto it = cache.find(ap.argument);
      if (it == cache.end()) {
        BigFloat u = ap.argument.as_polynomial().evaluate(point, precision_bits);
        if (abs(u) < margin_f) {
          throw PoleError("coth argument " + ap.argument.to_string() + " within pole margin",
                          ap.argument.to_string());
        }
        it = cache.emplace(ap.argument, sdyn::coth(u)).first;
      }
      term *= it->second.pow(ap.power);
    }
    total += term;
  }
  return total;
}

ZeroDecision ScalarExpr::is_zero(const SamplingOptions& options) const {
  ZeroDecision out;
  if (terms_.empty()) return out;
  if (!has_coth()) {
    out.status = ZeroStatus::nonzero;
    return out;
  }
  int dim = std::max(1, max_variable() + 1);
  std::mt19937_64 rng(options.seed);
  auto singular = singular_forms();
  auto points = draw_lattice_points(dim, options.points, singular, options.pole_margin,
                                    options.lattice_radius, rng);
  BigFloat worst(options.precision_bits);
  for (const auto& p : points) {
    auto x = to_bigfloat(p, options.precision_bits);
    BigFloat v = abs(eval_numeric(x, options.precision_bits, options.pole_margin));
    if (worst < v) worst = v;
    ++out.points_used;
  }
  out.max_abs = worst.to_double();
  out.status = worst < BigFloat(options.tolerance, options.precision_bits) ? ZeroStatus::probably_zero
                                                                           : ZeroStatus::nonzero;
  return out;
}

std::string ScalarExpr::to_sexpr() const {
  if (terms_.empty()) return "0";
  std::vector<std::string> parts;
  for (const auto& [m, c] : terms_) {
    std::string ratfun = "(ratfun " + quoted(c.numerator().to_string()) + " " +
                         quoted(c.denominator().to_string()) + ")";
    if (m.empty()) {
      parts.push_back(ratfun);
      continue;
    }
    std::ostringstream os;
    os << "(* " << ratfun;
    for (const auto& ap : m) {
      for (unsigned k = 0; k < ap.power; ++k) {
        os << " (coth";
        for (const auto& a : ap.argument.linear) os << " " << a.get_str();
        os << " " << ap.argument.constant.get_str() << ")";
      }
    }
    os << ")";
    parts.push_back(os.str());
  }
  if (parts.size() == 1) return parts.front();
  std::string out = "(+";
  for (const auto& p : parts) out += " " + p;
  return out + ")";
}

}  // namespace sdyn
