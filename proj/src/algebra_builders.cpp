#include "sdyn/errors.hpp"
#include "sdyn/superalgebra.hpp"

#include <stdexcept>

namespace sdyn {

SuperMatrix SuperMatrix::zero(int m, int n) {
  auto size = static_cast<std::size_t>(m + n);
  return SuperMatrix{m, n, RationalMatrix(size, RationalVector(size, Rational(0)))};
}

SuperMatrix SuperMatrix::unit(int m, int n, int row, int col) {
  SuperMatrix out = zero(m, n);
  out.entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 1;
  return out;
}

SuperMatrix SuperMatrix::operator*(const SuperMatrix& rhs) const {
  SuperMatrix out = zero(m, n);
  const auto s = static_cast<std::size_t>(size());
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t k = 0; k < s; ++k) {
      if (entries[i][k] == 0) continue;
      for (std::size_t j = 0; j < s; ++j) out.entries[i][j] += entries[i][k] * rhs.entries[k][j];
    }
  return out;
}

SuperMatrix SuperMatrix::operator+(const SuperMatrix& rhs) const {
  SuperMatrix out(*this);
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries.size(); ++j) out.entries[i][j] += rhs.entries[i][j];
  return out;
}

SuperMatrix SuperMatrix::operator-(const SuperMatrix& rhs) const { return *this + rhs.scaled(-1); }

SuperMatrix SuperMatrix::scaled(const Rational& c) const {
  SuperMatrix out(*this);
  for (auto& row : out.entries)
    for (auto& x : row) x *= c;
  return out;
}

Rational SuperMatrix::supertrace() const {
  Rational out(0);
  for (int i = 0; i < size(); ++i) {
    const Rational& d = entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    out += index_parity(i) == Parity::even ? d : Rational(-d);
  }
  return out;
}

bool SuperMatrix::is_zero() const {
  for (const auto& row : entries)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

Parity SuperMatrix::parity() const {
  bool seen_even = false;
  bool seen_odd = false;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      if (entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0) continue;
      (index_parity(i) + index_parity(j) == Parity::even ? seen_even : seen_odd) = true;
    }
  if (seen_even && seen_odd) throw std::invalid_argument("supermatrix is not homogeneous");
  return seen_odd ? Parity::odd : Parity::even;
}

SuperMatrix supercommutator(const SuperMatrix& x, const SuperMatrix& y) {
  SuperMatrix xy = x * y;
  SuperMatrix yx = y * x;
  return koszul(x.parity(), y.parity()) < 0 ? xy + yx : xy - yx;
}

namespace {

struct MatrixBasis {
  std::vector<SuperMatrix> matrices;
  std::vector<std::string> labels;
  std::vector<int> cartan;
};

std::string unit_label(int i, int j) { return "E" + std::to_string(i + 1) + std::to_string(j + 1); }

MatrixBasis gl_basis(int m, int n) {
  MatrixBasis b;
  for (int i = 0; i < m + n; ++i)
    for (int j = 0; j < m + n; ++j) {
      if (i == j) b.cartan.push_back(static_cast<int>(b.matrices.size()));
      b.matrices.push_back(SuperMatrix::unit(m, n, i, j));
      b.labels.push_back(unit_label(i, j));
    }
  return b;
}

MatrixBasis sl_basis(int m, int n) {
  MatrixBasis b;
  const int p = m + n;
  auto sign = [m](int i) { return i < m ? 1 : -1; };
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      if (i != j) {
        b.matrices.push_back(SuperMatrix::unit(m, n, i, j));
        b.labels.push_back(unit_label(i, j));
      } else if (i + 1 < p) {
        b.cartan.push_back(static_cast<int>(b.matrices.size()));
        SuperMatrix h = SuperMatrix::unit(m, n, i, i) -
                        SuperMatrix::unit(m, n, i + 1, i + 1).scaled(sign(i) * sign(i + 1));
        b.matrices.push_back(std::move(h));
        b.labels.push_back("H" + std::to_string(i + 1));
      }
    }
  return b;
}

RationalVector flatten(const SuperMatrix& x) {
  RationalVector out;
  for (const auto& row : x.entries) out.insert(out.end(), row.begin(), row.end());
  return out;
}

RationalVector coordinates(const std::vector<RationalVector>& flat_basis, const SuperMatrix& x,
                           const char* what) {
  auto c = solve_in_span(flat_basis, flatten(x));
  if (!c) throw std::logic_error(std::string(what) + " is not in the span of the basis");
  return *c;
}

LieSuperalgebra from_matrices(std::string name, int m, int n, MatrixBasis basis,
                              const Rational& form_scale) {
  const auto d = basis.matrices.size();
  std::vector<RationalVector> flat;
  flat.reserve(d);
  for (const auto& x : basis.matrices) flat.push_back(flatten(x));

  std::vector<Parity> parities;
  for (const auto& x : basis.matrices) parities.push_back(x.parity());

  std::vector<std::vector<StructureTerm>> structure(d * d);
  RationalMatrix form(d, RationalVector(d, Rational(0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      SuperMatrix br = supercommutator(basis.matrices[i], basis.matrices[j]);
      if (!br.is_zero()) {
        RationalVector c = coordinates(flat, br, "bracket");
        for (std::size_t k = 0; k < d; ++k)
          if (c[k] != 0) structure[i * d + j].push_back({static_cast<int>(k), c[k]});
      }
      form[i][j] = form_scale * (basis.matrices[i] * basis.matrices[j]).supertrace();
    }

  // diag(p, p-1, ..., 1), shifted by a multiple of the identity when the
  // algebra is supertraceless, is regular and positive exactly on E_ij, i<j.
  const int p = m + n;
  SuperMatrix rho = SuperMatrix::zero(m, n);
  for (int i = 0; i < p; ++i) rho.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = p - i;
  auto in_span = solve_in_span(flat, flatten(rho));
  if (!in_span) {
    Rational shift = -rho.supertrace() / Rational(m - n);
    for (int i = 0; i < p; ++i) rho.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += shift;
    in_span = solve_in_span(flat, flatten(rho));
    if (!in_span) throw std::logic_error("regular element is not in the algebra");
  }

  return LieSuperalgebra(std::move(name), std::move(basis.labels), std::move(parities),
                         std::move(structure), std::move(form), std::move(basis.cartan), *in_span);
}

std::string family_name(const char* family, int m, int n) {
  return std::string(family) + "(" + std::to_string(m) + "|" + std::to_string(n) + ")";
}

void check_sizes(int m, int n) {
  if (m < 0 || n < 0 || m + n < 2) throw std::invalid_argument("need m, n >= 0 and m + n >= 2");
}

}  // namespace

LieSuperalgebra build_gl(int m, int n, const Rational& form_scale) {
  check_sizes(m, n);
  if (form_scale == 0) throw DegenerateFormError("form scale must be nonzero");
  return from_matrices(family_name("gl", m, n), m, n, gl_basis(m, n), form_scale);
}

LieSuperalgebra build_sl(int m, int n, const Rational& form_scale) {
  check_sizes(m, n);
  if (m == n) {
    throw DegenerateFormError("the supertrace form is degenerate on sl(" + std::to_string(m) + "|" +
                              std::to_string(n) + ")");
  }
  if (form_scale == 0) throw DegenerateFormError("form scale must be nonzero");
  return from_matrices(family_name("sl", m, n), m, n, sl_basis(m, n), form_scale);
}

std::vector<SuperMatrix> matrix_realization(const std::string& family, int m, int n) {
  check_sizes(m, n);
  if (family == "gl") return gl_basis(m, n).matrices;
  if (family == "sl") return sl_basis(m, n).matrices;
  throw std::invalid_argument("unknown family '" + family + "'");
}

}  // namespace sdyn
