#pragma once

// Random generators and small oracles shared by the unit tests.

#include "sdyn/root_datum.hpp"
#include "sdyn/scalar_expr.hpp"
#include "sdyn/superalgebra.hpp"
#include "sdyn/tensor.hpp"

#include <ostream>
#include <random>

namespace sdyn {

inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const RationalFunction& f, std::ostream* os) { *os << f.to_string(); }
inline void PrintTo(const ScalarExpr& f, std::ostream* os) { *os << f.to_sexpr(); }

}  // namespace sdyn

namespace sdyn::testing {

inline Rational random_rational(std::mt19937_64& rng, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, int span = 5) {
  Rational r;
  do r = random_rational(rng, span);
  while (r == 0);
  return r;
}

/// Up to `terms` monomials of total degree <= 2 in `vars` variables.
inline Polynomial random_polynomial(std::mt19937_64& rng, int vars, int terms = 3) {
  std::uniform_int_distribution<int> deg(0, 2);
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    Monomial m(static_cast<std::size_t>(vars), 0);
    for (auto& e : m) e = static_cast<std::uint32_t>(deg(rng) == 2 ? 1 : 0);
    while (!m.empty() && m.back() == 0) m.pop_back();
    p += Polynomial::monomial(m, random_rational(rng));
  }
  return p;
}

inline RationalFunction random_rational_function(std::mt19937_64& rng, int vars) {
  Polynomial den;
  do den = random_polynomial(rng, vars, 2);
  while (den.is_zero());
  return RationalFunction(random_polynomial(rng, vars), den);
}

inline std::vector<Rational> random_linear(std::mt19937_64& rng, int vars) {
  std::vector<Rational> l;
  for (int i = 0; i < vars; ++i) l.push_back(random_rational(rng, 3));
  bool zero = true;
  for (const auto& x : l) zero = zero && x == 0;
  if (zero) l[0] = 1;
  return l;
}

/// Sum of a rational function and one or two coth-weighted terms.
inline ScalarExpr random_scalar(std::mt19937_64& rng, int vars) {
  ScalarExpr f(random_rational_function(rng, vars));
  f += ScalarExpr(random_rational_function(rng, vars)) * ScalarExpr::coth(random_linear(rng, vars), random_rational(rng));
  if (rng() % 2)
    f += ScalarExpr(random_rational(rng)) * ScalarExpr::coth(random_linear(rng, vars), Rational(0)) *
         ScalarExpr::coth(random_linear(rng, vars), Rational(1));
  return f;
}

/// Zero-weight s with s + T_s s = 0: an antisymmetric Cartan part with
/// random rational-function entries and phi_a e_a (x) e_-a with random phi_a
/// for positive a, phi_-a = -(-1)^{|a|} phi_a. With `coth`, some phi carry
/// coth atoms.
inline Tensor2 random_unitary_s(std::mt19937_64& rng, const LieSuperalgebra& g, const RootDatum& rd, bool coth) {
  Tensor2 s;
  const auto cartan = g.cartan_indices();
  const int n = static_cast<int>(cartan.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ScalarExpr d(random_rational_function(rng, n));
      s.add({cartan[static_cast<std::size_t>(i)], cartan[static_cast<std::size_t>(j)]}, d);
      s.add({cartan[static_cast<std::size_t>(j)], cartan[static_cast<std::size_t>(i)]}, -d);
    }
  for (int a = 0; a < rd.size(); ++a) {
    if (!rd.root(a).positive) continue;
    ScalarExpr f = coth && rng() % 2 ? random_scalar(rng, n) : ScalarExpr(random_rational_function(rng, n));
    const int e = rd.root(a).basis_index, ne = rd.root(rd.negative(a)).basis_index;
    s.add({e, ne}, f);
    s.add({ne, e}, rd.root(a).parity == Parity::odd ? f : -f);
  }
  return s;
}

inline GVector unit(const LieSuperalgebra& g, int i) { return g.basis_vector(i); }

inline int find_label(const LieSuperalgebra& g, const std::string& label) {
  for (int i = 0; i < g.dim(); ++i)
    if (g.label(i) == label) return i;
  return -1;
}

}  // namespace sdyn::testing
