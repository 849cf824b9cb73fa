#include "sdyn/algebra_checks.hpp"

namespace sdyn {

namespace {

bool is_zero(const GVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

GVector scaled(GVector v, const Rational& c) {
  for (auto& x : v) x *= c;
  return v;
}

GVector added(GVector a, const GVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

std::string triple(const LieSuperalgebra& g, int i, int j, int k) {
  return "(" + g.label(i) + ", " + g.label(j) + ", " + g.label(k) + ")";
}

void fail(AlgebraCheck& c, std::string witness) {
  if (c.passed) {
    c.passed = false;
    c.witness = std::move(witness);
  }
}

std::string root_name(const LieSuperalgebra& g, const RootDatum& rd, int a) {
  return "root#" + std::to_string(a) + "[" + g.label(rd.root(a).basis_index) + "]";
}

}  // namespace

AlgebraCheck check_super_skew_symmetry(const LieSuperalgebra& g) {
  AlgebraCheck c;
  c.name = "super skew-symmetry";
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j)
      for (int k = 0; k < g.dim(); ++k) {
        ++c.cases;
        Rational lhs = g.structure_constant(i, j, k);
        Rational rhs = -koszul(g.parity(i), g.parity(j)) * g.structure_constant(j, i, k);
        if (lhs != rhs) fail(c, "c" + triple(g, i, j, k) + " = " + lhs.get_str() + " but expected " + rhs.get_str());
      }
  return c;
}

AlgebraCheck check_parity_consistency(const LieSuperalgebra& g) {
  AlgebraCheck c;
  c.name = "parity consistency";
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j)
      for (const auto& t : g.bracket_terms(i, j)) {
        ++c.cases;
        if (g.parity(t.index) != g.parity(i) + g.parity(j))
          fail(c, "[" + g.label(i) + ", " + g.label(j) + "] has a component along " + g.label(t.index));
      }
  return c;
}

AlgebraCheck check_super_jacobi(const LieSuperalgebra& g) {
  AlgebraCheck c;
  c.name = "super Jacobi identity";
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j)
      for (int k = 0; k < g.dim(); ++k) {
        ++c.cases;
        GVector x = g.basis_vector(i), y = g.basis_vector(j), z = g.basis_vector(k);
        Parity px = g.parity(i), py = g.parity(j), pz = g.parity(k);
        GVector total = scaled(g.bracket(x, g.bracket(y, z)), koszul(px, pz));
        total = added(total, scaled(g.bracket(y, g.bracket(z, x)), koszul(py, px)));
        total = added(total, scaled(g.bracket(z, g.bracket(x, y)), koszul(pz, py)));
        if (!is_zero(total)) fail(c, "basis triple " + triple(g, i, j, k) + " gives " + g.describe(total));
      }
  return c;
}

AlgebraCheck check_invariant_form(const LieSuperalgebra& g) {
  AlgebraCheck c;
  c.name = "invariant form";
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) {
      ++c.cases;
      if (g.form(i, j) != koszul(g.parity(i), g.parity(j)) * g.form(j, i))
        fail(c, "not supersymmetric on (" + g.label(i) + ", " + g.label(j) + ")");
      if (g.parity(i) != g.parity(j) && g.form(i, j) != 0)
        fail(c, "not even on (" + g.label(i) + ", " + g.label(j) + ")");
      for (int k = 0; k < g.dim(); ++k) {
        GVector x = g.basis_vector(i), y = g.basis_vector(j), z = g.basis_vector(k);
        if (g.form(g.bracket(x, y), z) != g.form(x, g.bracket(y, z)))
          fail(c, "([x,y],z) != (x,[y,z]) for " + triple(g, i, j, k));
      }
    }
  if (determinant(g.form_matrix()) == 0) fail(c, "form matrix is singular");
  return c;
}

AlgebraCheck check_cartan(const LieSuperalgebra& g) {
  AlgebraCheck c;
  c.name = "Cartan subalgebra";
  for (int x : g.cartan_indices()) {
    if (g.parity(x) != Parity::even) fail(c, g.label(x) + " is odd");
    for (int y : g.cartan_indices()) {
      ++c.cases;
      if (!g.bracket_terms(x, y).empty()) fail(c, "[" + g.label(x) + ", " + g.label(y) + "] != 0");
    }
  }
  return c;
}

AlgebraCheck check_root_datum(const LieSuperalgebra& g, const RootDatum& rd) {
  AlgebraCheck c;
  c.name = "root datum";
  const auto cartan = g.cartan_indices();
  for (int a = 0; a < rd.size(); ++a) {
    ++c.cases;
    const Root& r = rd.root(a);
    const GVector& e = rd.root_vector(a);
    if (g.parity_of(e) != r.parity) fail(c, root_name(g, rd, a) + ": parity mismatch");
    for (std::size_t i = 0; i < cartan.size(); ++i) {
      GVector lhs = g.bracket(g.basis_vector(cartan[i]), e);
      if (lhs != scaled(e, r.functional[i])) fail(c, root_name(g, rd, a) + ": not an eigenvector of " + g.label(cartan[i]));
    }
    if (r.positive && rd.pairing(a) != 1) fail(c, root_name(g, rd, a) + ": (e_a, e_-a) != 1");
    if (rd.pairing(a) != g.form(e, rd.root_vector(rd.negative(a)))) fail(c, root_name(g, rd, a) + ": stored pairing is stale");
    GVector br = g.bracket(e, rd.root_vector(rd.negative(a)));
    if (br != scaled(rd.coroot(a), rd.pairing(a))) fail(c, root_name(g, rd, a) + ": [e_a, e_-a] != (e_a, e_-a) h_a");
    for (std::size_t i = 0; i < cartan.size(); ++i) {
      if (g.form(rd.coroot(a), g.basis_vector(cartan[i])) != r.functional[i])
        fail(c, root_name(g, rd, a) + ": (h_a, x) != a(x)");
    }
    int na = rd.negative(a);
    if (rd.root(na).parity != r.parity || rd.root(na).positive == r.positive)
      fail(c, root_name(g, rd, a) + ": negative root has wrong parity or sign");
    if (rd.sign_A(na) != koszul(r.parity, Parity::odd) * rd.sign_A(a))
      fail(c, root_name(g, rd, a) + ": A_{-a} != (-1)^{|a|} A_a");
  }
  return c;
}

AlgebraCheck check_structure_constant_identities(const LieSuperalgebra& g, const RootDatum& rd) {
  AlgebraCheck c;
  c.name = "root structure-constant identities";
  long isotropic_pairs = 0;
  for (int a = 0; a < rd.size(); ++a)
    for (int b = 0; b < rd.size(); ++b) {
      auto ab = rd.sum(a, b);
      if (!ab) continue;
      Rational cab = rd.root_structure_constant(g, a, b);
      if (cab == 0) continue;
      ++c.cases;
      const int na = rd.negative(a), nb = rd.negative(b), nab = rd.negative(*ab);
      const int pa = bit(rd.root(a).parity), pb = bit(rd.root(b).parity);
      const int s_ab = (pa & pb) ? -1 : 1;
      const int s_a = pa ? -1 : 1;
      const int s_b = pb ? -1 : 1;
      Rational hh = g.form(rd.coroot(a), rd.coroot(b));
      if (hh == 0) ++isotropic_pairs;

      Rational lhs1 = rd.root_structure_constant(g, nb, *ab);
      Rational rhs1 = s_ab * s_b * rd.sign_A(nb) * hh / cab;
      Rational lhs2 = rd.root_structure_constant(g, na, *ab);
      Rational rhs2 = -s_a * rd.sign_A(na) * hh / cab;
      Rational lhs3 = rd.root_structure_constant(g, na, nb);
      Rational rhs3 = s_ab * s_a * s_b * rd.sign_A(*ab) * rd.sign_A(na) * rd.sign_A(nb) * hh / cab;
      (void)nab;
      auto pair = "(" + root_name(g, rd, a) + ", " + root_name(g, rd, b) + ")";
      if (lhs1 != rhs1) fail(c, "C_{-b,a+b}^a = " + lhs1.get_str() + " != " + rhs1.get_str() + " for " + pair);
      if (lhs2 != rhs2) fail(c, "C_{-a,a+b}^b = " + lhs2.get_str() + " != " + rhs2.get_str() + " for " + pair);
      if (lhs3 != rhs3) fail(c, "C_{-a,-b}^{-a-b} = " + lhs3.get_str() + " != " + rhs3.get_str() + " for " + pair);
    }
  c.note = std::to_string(isotropic_pairs) + " pair(s) with (h_a, h_b) = 0";
  return c;
}

RationalMatrix casimir_matrix(const LieSuperalgebra& g, const RootDatum& rd) {
  const auto d = static_cast<std::size_t>(g.dim());
  RationalMatrix omega(d, RationalVector(d, Rational(0)));
  const auto cartan = g.cartan_indices();
  const auto& ginv = rd.cartan_gram_inverse();
  // x^k = sum_j ginv[j][k] x_j
  for (std::size_t k = 0; k < cartan.size(); ++k)
    for (std::size_t j = 0; j < cartan.size(); ++j)
      omega[static_cast<std::size_t>(cartan[k])][static_cast<std::size_t>(cartan[j])] += ginv[j][k];
  for (int a = 0; a < rd.size(); ++a) {
    const GVector& e = rd.root_vector(a);
    const GVector& f = rd.root_vector(rd.negative(a));
    for (std::size_t i = 0; i < d; ++i) {
      if (e[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j)
        if (f[j] != 0) omega[i][j] += rd.sign_A(a) * e[i] * f[j];
    }
  }
  return omega;
}

AlgebraCheck check_casimir_invariance(const LieSuperalgebra& g, const RationalMatrix& omega) {
  AlgebraCheck c;
  c.name = "Casimir ad-invariance";
  const auto d = static_cast<std::size_t>(g.dim());
  for (int z = 0; z < g.dim(); ++z) {
    ++c.cases;
    RationalMatrix out(d, RationalVector(d, Rational(0)));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Rational& w = omega[i][j];
        if (w == 0) continue;
        for (const auto& t : g.bracket_terms(z, static_cast<int>(i)))
          out[static_cast<std::size_t>(t.index)][j] += w * t.coefficient;
        int sign = koszul(g.parity(z), g.parity(static_cast<int>(i)));
        for (const auto& t : g.bracket_terms(z, static_cast<int>(j)))
          out[i][static_cast<std::size_t>(t.index)] += sign * w * t.coefficient;
      }
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (out[i][j] != 0)
          fail(c, "z = " + g.label(z) + " leaves " + out[i][j].get_str() + " on " + g.label(static_cast<int>(i)) +
                      " (x) " + g.label(static_cast<int>(j)));
  }
  return c;
}

}  // namespace sdyn
