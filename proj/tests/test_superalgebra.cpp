#include "sdyn/algebra_checks.hpp"
#include "sdyn/casimir.hpp"
#include "sdyn/errors.hpp"
#include "sdyn/root_datum.hpp"
#include "sdyn/superalgebra.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace sdyn;
using sdyn::testing::find_label;

namespace {

struct Shape {
  const char* family;
  int m;
  int n;
};

LieSuperalgebra build(const Shape& s) { return s.family[0] == 'g' ? build_gl(s.m, s.n) : build_sl(s.m, s.n); }

std::string shape_name(const Shape& s) { return std::string(s.family) + "(" + std::to_string(s.m) + "|" + std::to_string(s.n) + ")"; }

// Dense oracle for gl(m|n) written straight from E_ij E_kl = delta_jk E_il;
// shares nothing with the library's builders.
struct UnitOracle {
  int m, n;
  int size() const { return m + n; }
  int par(int i) const { return i < m ? 0 : 1; }
  int unit_parity(int i, int j) const { return (par(i) + par(j)) % 2; }
  // [E_ij, E_kl] as a map from (row, col) to coefficient.
  std::map<std::pair<int, int>, long> bracket(int i, int j, int k, int l) const {
    std::map<std::pair<int, int>, long> out;
    const long sign = (unit_parity(i, j) * unit_parity(k, l)) ? -1 : 1;
    if (j == k) out[{i, l}] += 1;
    if (l == i) out[{k, j}] -= sign;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }
  long str_form(int i, int j, int k, int l) const { return (j == k && i == l) ? (par(i) ? -1 : 1) : 0; }
};

// Basis index of E_{row,col} (0-based) in build_gl's ordering.
int gl_index(int size, int row, int col) { return row * size + col; }

const std::vector<Shape> kShapes = {{"gl", 1, 1}, {"gl", 2, 1}, {"gl", 1, 2}, {"gl", 3, 0},
                                    {"sl", 2, 0}, {"sl", 3, 0}, {"sl", 2, 1}, {"sl", 1, 2}};

}  // namespace

TEST(Superalgebra, GlStructureConstantsMatchMatrixUnits) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {3, 0}, {2, 2}, {0, 2}}) {
    LieSuperalgebra g = build_gl(m, n);
    UnitOracle o{m, n};
    const int s = o.size();
    ASSERT_EQ(g.dim(), s * s);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        const int a = gl_index(s, i, j);
        EXPECT_EQ(bit(g.parity(a)), o.unit_parity(i, j));
        for (int k = 0; k < s; ++k)
          for (int l = 0; l < s; ++l) {
            const int b = gl_index(s, k, l);
            EXPECT_EQ(g.form(a, b), Rational(o.str_form(i, j, k, l)));
            auto expected = o.bracket(i, j, k, l);
            for (int p = 0; p < s; ++p)
              for (int q = 0; q < s; ++q) {
                auto it = expected.find({p, q});
                Rational want = it == expected.end() ? Rational(0) : Rational(it->second);
                EXPECT_EQ(g.structure_constant(a, b, gl_index(s, p, q)), want)
                    << g.name() << " [" << g.label(a) << ", " << g.label(b) << "] at " << g.label(gl_index(s, p, q));
              }
          }
      }
  }
}

TEST(Superalgebra, Gl11OddBracket) {
  LieSuperalgebra g = build_gl(1, 1);
  GVector br = g.bracket(g.basis_vector(find_label(g, "E12")), g.basis_vector(find_label(g, "E21")));
  GVector want(4, Rational(0));
  want[static_cast<std::size_t>(find_label(g, "E11"))] = 1;
  want[static_cast<std::size_t>(find_label(g, "E22"))] = 1;
  EXPECT_EQ(br, want);
  EXPECT_EQ(g.parity(find_label(g, "E12")), Parity::odd);
}

TEST(Superalgebra, Gl21FormValues) {
  LieSuperalgebra g = build_gl(2, 1);
  auto f = [&](const char* a, const char* b) { return g.form(find_label(g, a), find_label(g, b)); };
  EXPECT_EQ(f("E11", "E11"), Rational(1));
  EXPECT_EQ(f("E33", "E33"), Rational(-1));
  EXPECT_EQ(f("E12", "E21"), Rational(1));
  EXPECT_EQ(f("E13", "E31"), Rational(1));
  EXPECT_EQ(f("E31", "E13"), Rational(-1));
  EXPECT_EQ(f("E11", "E22"), Rational(0));
}

TEST(Superalgebra, FormScaleIsLinear) {
  LieSuperalgebra g1 = build_gl(2, 1);
  LieSuperalgebra g3 = build_gl(2, 1, Rational(3));
  for (int i = 0; i < g1.dim(); ++i)
    for (int j = 0; j < g1.dim(); ++j) EXPECT_EQ(g3.form(i, j), 3 * g1.form(i, j));
}

TEST(Superalgebra, Dimensions) {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      if (m + n < 2) {
        EXPECT_THROW(build_gl(m, n), std::invalid_argument);
        continue;
      }
      EXPECT_EQ(build_gl(m, n).dim(), (m + n) * (m + n));
      EXPECT_EQ(build_gl(m, n).rank(), m + n);
      if (m != n) {
        EXPECT_EQ(build_sl(m, n).dim(), (m + n) * (m + n) - 1);
        EXPECT_EQ(build_sl(m, n).rank(), m + n - 1);
      }
    }
}

TEST(Superalgebra, SlWithEqualBlocksIsRejected) {
  EXPECT_THROW(build_sl(1, 1), DegenerateFormError);
  EXPECT_THROW(build_sl(2, 2), DegenerateFormError);
}

TEST(Superalgebra, SlCartanIsSupertraceless) {
  for (const Shape& s : kShapes) {
    if (s.family[0] != 's') continue;
    auto mats = matrix_realization("sl", s.m, s.n);
    for (const auto& mat : mats) EXPECT_EQ(mat.supertrace(), Rational(0)) << shape_name(s);
  }
}

TEST(Superalgebra, MatrixRealizationIsAHomomorphism) {
  for (const Shape& s : kShapes) {
    LieSuperalgebra g = build(s);
    auto mats = matrix_realization(s.family, s.m, s.n);
    ASSERT_EQ(static_cast<int>(mats.size()), g.dim());
    for (int i = 0; i < g.dim(); ++i) {
      EXPECT_EQ(mats[static_cast<std::size_t>(i)].parity(), g.parity(i));
      for (int j = 0; j < g.dim(); ++j) {
        SuperMatrix lhs = supercommutator(mats[static_cast<std::size_t>(i)], mats[static_cast<std::size_t>(j)]);
        SuperMatrix rhs = SuperMatrix::zero(s.m, s.n);
        for (const auto& t : g.bracket_terms(i, j)) rhs = rhs + mats[static_cast<std::size_t>(t.index)].scaled(t.coefficient);
        EXPECT_TRUE((lhs - rhs).is_zero()) << shape_name(s) << " " << g.label(i) << " " << g.label(j);
        EXPECT_EQ(g.form(i, j), (mats[static_cast<std::size_t>(i)] * mats[static_cast<std::size_t>(j)]).supertrace());
      }
    }
  }
}

TEST(Superalgebra, BracketOfInhomogeneousVectorsIsBilinear) {
  LieSuperalgebra g = build_gl(2, 1);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    GVector x(9), y(9), z(9);
    for (int i = 0; i < 9; ++i) {
      x[static_cast<std::size_t>(i)] = sdyn::testing::random_rational(rng);
      y[static_cast<std::size_t>(i)] = sdyn::testing::random_rational(rng);
    }
    GVector sum(9);
    for (int i = 0; i < 9; ++i) sum[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(i)];
    GVector e = g.basis_vector(4);
    GVector lhs = g.bracket(sum, e);
    GVector a = g.bracket(x, e), b = g.bracket(y, e);
    for (int i = 0; i < 9; ++i) EXPECT_EQ(lhs[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)]);
  }
  GVector mixed = g.basis_vector(0);
  mixed[2] = 1;
  EXPECT_THROW(g.parity_of(mixed), std::invalid_argument);
}

TEST(Superalgebra, AllIdentitiesHold) {
  std::vector<Shape> shapes = kShapes;
  shapes.push_back({"gl", 2, 2});
  for (const Shape& s : shapes) {
    LieSuperalgebra g = build(s);
    RootDatum rd = root_decomposition(g);
    for (const AlgebraCheck& c :
         {check_super_skew_symmetry(g), check_parity_consistency(g), check_super_jacobi(g), check_invariant_form(g),
          check_cartan(g), check_root_datum(g, rd), check_structure_constant_identities(g, rd),
          check_casimir_invariance(g, casimir_matrix(g, rd))}) {
      EXPECT_TRUE(c.passed) << shape_name(s) << " " << c.name << ": " << c.witness;
      // Size-2 algebras have no pair of roots summing to a root.
      if (s.m + s.n > 2) EXPECT_GT(c.cases, 0) << shape_name(s) << " " << c.name;
    }
  }
}

TEST(Superalgebra, JacobiDetectsPerturbedStructureConstant) {
  LieSuperalgebra g = build_gl(2, 1);
  std::vector<std::vector<StructureTerm>> structure;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) {
      auto terms = g.bracket_terms(i, j);
      structure.emplace_back(terms.begin(), terms.end());
    }
  // Scale [E12, E23] = E13 and its mirror by 2; skew-symmetry still holds.
  const int e12 = find_label(g, "E12"), e23 = find_label(g, "E23");
  for (auto [a, b] : {std::pair{e12, e23}, std::pair{e23, e12}})
    for (auto& t : structure[static_cast<std::size_t>(a * g.dim() + b)]) t.coefficient *= 2;
  std::vector<std::string> labels;
  std::vector<Parity> parities(g.parities().begin(), g.parities().end());
  for (int i = 0; i < g.dim(); ++i) labels.push_back(g.label(i));
  std::vector<int> cartan(g.cartan_indices().begin(), g.cartan_indices().end());
  LieSuperalgebra bad("bad", labels, parities, structure, g.form_matrix(), cartan, g.regular_element());
  EXPECT_TRUE(check_super_skew_symmetry(bad).passed);
  AlgebraCheck jac = check_super_jacobi(bad);
  EXPECT_FALSE(jac.passed);
  EXPECT_FALSE(jac.witness.empty());
  EXPECT_FALSE(check_invariant_form(bad).passed);
}

TEST(Superalgebra, RootCountsAndSigns) {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      if (m + n < 2 || m + n > 4) continue;
      for (const char* fam : {"gl", "sl"}) {
        if (fam[0] == 's' && m == n) continue;
        LieSuperalgebra g = fam[0] == 'g' ? build_gl(m, n) : build_sl(m, n);
        RootDatum rd = root_decomposition(g);  // throws if a root space is not one-dimensional
        const int s = m + n;
        ASSERT_EQ(rd.size(), s * s - s) << fam << m << n;
        int positive = 0, odd = 0, minus = 0;
        for (int a = 0; a < rd.size(); ++a) {
          const Root& r = rd.root(a);
          positive += r.positive;
          odd += r.parity == Parity::odd;
          minus += rd.sign_A(a) == -1;
          EXPECT_EQ(rd.sign_A(a), (r.positive && r.parity == Parity::odd) ? -1 : 1);
          EXPECT_EQ(rd.negative(rd.negative(a)), a);
          EXPECT_NE(rd.root(rd.negative(a)).positive, r.positive);
          if (a > 0) EXPECT_LT(rd.root(a - 1).basis_index, r.basis_index);
        }
        EXPECT_EQ(positive, rd.size() / 2);
        EXPECT_EQ(odd, 2 * m * n);
        EXPECT_EQ(minus, m * n);
      }
    }
}

TEST(Superalgebra, Gl21RootData) {
  LieSuperalgebra g = build_gl(2, 1);
  RootDatum rd = root_decomposition(g);
  ASSERT_EQ(rd.size(), 6);
  std::vector<std::string> labels;
  for (int a = 0; a < 6; ++a) labels.push_back(g.label(rd.root(a).basis_index));
  EXPECT_EQ(labels, (std::vector<std::string>{"E12", "E13", "E21", "E23", "E31", "E32"}));
  EXPECT_TRUE(rd.root(0).positive);
  EXPECT_TRUE(rd.root(1).positive);
  EXPECT_TRUE(rd.root(3).positive);
  EXPECT_EQ(rd.root(1).functional, (RationalVector{1, 0, -1}));
  auto sum = rd.sum(0, 3);
  ASSERT_TRUE(sum);
  EXPECT_EQ(*sum, 1);
  EXPECT_EQ(rd.root_structure_constant(g, 0, 3), Rational(1));
  EXPECT_FALSE(rd.sum(0, 1));
  EXPECT_EQ(rd.pairing(1), Rational(1));
  EXPECT_EQ(rd.pairing(4), Rational(-1));
  // (h_a, x_i) = a(x_i) straight from the form.
  for (int a = 0; a < rd.size(); ++a)
    for (int i = 0; i < g.rank(); ++i)
      EXPECT_EQ(g.form(rd.coroot(a), g.basis_vector(g.cartan_indices()[static_cast<std::size_t>(i)])),
                rd.root(a).functional[static_cast<std::size_t>(i)]);
}

TEST(Superalgebra, DominantPointIsPositiveOnPositiveRoots) {
  for (const Shape& s : kShapes) {
    LieSuperalgebra g = build(s);
    RootDatum rd = root_decomposition(g);
    RationalVector l0 = rd.dominant_point(g);
    for (int a = 0; a < rd.size(); ++a) {
      Rational v = 0;
      for (int i = 0; i < rd.rank(); ++i)
        v += rd.coroot_coordinates(a)[static_cast<std::size_t>(i)] * l0[static_cast<std::size_t>(i)];
      EXPECT_EQ(v > 0, rd.root(a).positive) << shape_name(s) << " root " << a;
    }
  }
}

TEST(Casimir, Sl2ClosedForm) {
  LieSuperalgebra g = build_sl(2, 0);
  RootDatum rd = root_decomposition(g);
  Tensor2 omega = casimir(g, rd);
  const int h = find_label(g, "H1"), e = find_label(g, "E12"), f = find_label(g, "E21");
  Tensor2 want;
  want.add({h, h}, Rational(1, 2));
  want.add({e, f}, 1);
  want.add({f, e}, 1);
  EXPECT_EQ(omega, want);
}

TEST(Casimir, SupersymmetricAndInvariant) {
  for (const Shape& s : kShapes) {
    LieSuperalgebra g = build(s);
    RootDatum rd = root_decomposition(g);
    Tensor2 omega = casimir(g, rd);
    EXPECT_EQ(super_twist(omega, g), omega) << shape_name(s);
    for (int z = 0; z < g.dim(); ++z) {
      if (g.parity(z) == Parity::odd) continue;
      EXPECT_TRUE(ad_action(g.basis_vector(z), omega, g).empty()) << shape_name(s) << " " << g.label(z);
    }
  }
}

TEST(Casimir, InverseOfTheForm) {
  // Omega is the tensor dual to the form: sum_ij O_ij (b_j, y) b_i = y for every basis y.
  for (const Shape& s : kShapes) {
    LieSuperalgebra g = build(s);
    RootDatum rd = root_decomposition(g);
    RationalMatrix om = casimir_matrix(g, rd);
    for (int y = 0; y < g.dim(); ++y)
      for (int i = 0; i < g.dim(); ++i) {
        Rational v = 0;
        for (int j = 0; j < g.dim(); ++j) v += om[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * g.form(j, y);
        EXPECT_EQ(v, Rational(i == y ? 1 : 0)) << shape_name(s);
      }
  }
}

TEST(Casimir, ScalesInverselyWithTheForm) {
  LieSuperalgebra g1 = build_gl(2, 1), g2 = build_gl(2, 1, Rational(2));
  RationalMatrix a = casimir_matrix(g1, root_decomposition(g1));
  RationalMatrix b = casimir_matrix(g2, root_decomposition(g2));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) EXPECT_EQ(2 * b[i][j], a[i][j]);
}
