#pragma once

#include "sdyn/linalg.hpp"

#include <span>
#include <string>
#include <vector>

namespace sdyn {

enum class Parity { even = 0, odd = 1 };

inline int bit(Parity p) { return static_cast<int>(p); }
inline Parity operator+(Parity a, Parity b) { return static_cast<Parity>(bit(a) ^ bit(b)); }
/// (-1)^{|a||b|}
inline int koszul(Parity a, Parity b) { return (bit(a) & bit(b)) ? -1 : 1; }
inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

/// Coordinates of an element of g in the algebra's basis.
using GVector = RationalVector;

/// One nonzero structure constant: [b_i, b_j] contains coefficient * b_index.
struct StructureTerm {
  int index;
  Rational coefficient;
};

/// A finite-dimensional Lie superalgebra given by a homogeneous basis, its
/// structure constants, an even supersymmetric invariant form and a choice
/// of Cartan basis vectors. Immutable after construction.
class LieSuperalgebra {
 public:
  LieSuperalgebra(std::string name, std::vector<std::string> labels, std::vector<Parity> parities,
                  std::vector<std::vector<StructureTerm>> structure, RationalMatrix form,
                  std::vector<int> cartan, GVector regular_element);

  const std::string& name() const noexcept { return name_; }
  int dim() const noexcept { return static_cast<int>(parities_.size()); }
  int rank() const noexcept { return static_cast<int>(cartan_.size()); }

  Parity parity(int i) const { return parities_[static_cast<std::size_t>(i)]; }
  std::span<const Parity> parities() const noexcept { return parities_; }
  const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

  /// Sparse [b_i, b_j].
  std::span<const StructureTerm> bracket_terms(int i, int j) const {
    return structure_[static_cast<std::size_t>(i * dim() + j)];
  }
  /// Coefficient of b_k in [b_i, b_j].
  Rational structure_constant(int i, int j, int k) const;

  /// Bilinear extension of the structure constants.
  GVector bracket(const GVector& x, const GVector& y) const;

  const RationalMatrix& form_matrix() const noexcept { return form_; }
  const Rational& form(int i, int j) const {
    return form_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  Rational form(const GVector& x, const GVector& y) const;

  /// Basis indices of the Cartan basis x_0 .. x_{N-1}, in coordinate order.
  std::span<const int> cartan_indices() const noexcept { return cartan_; }
  bool is_cartan(int i) const;

  /// A Cartan element on which no root vanishes; roots positive on it form
  /// the fixed positive system.
  const GVector& regular_element() const noexcept { return regular_; }

  GVector basis_vector(int i) const;
  /// Parity of a homogeneous vector; throws std::invalid_argument otherwise.
  Parity parity_of(const GVector& x) const;

  std::string describe(const GVector& x) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Parity> parities_;
  std::vector<std::vector<StructureTerm>> structure_;
  RationalMatrix form_;
  std::vector<int> cartan_;
  GVector regular_;
};

/// gl(m|n) in the matrix-unit basis E_ij with the supertrace form
/// (x, y) = form_scale * str(xy). Rows/columns 1..m are even, m+1..m+n odd.
/// Cartan = diagonal units.
LieSuperalgebra build_gl(int m, int n, const Rational& form_scale = Rational(1));

/// sl(m|n): off-diagonal units plus the supertraceless diagonal elements
/// E_ii - s_i s_{i+1} E_{i+1,i+1} (s_i = +1 for even, -1 for odd indices).
/// Throws DegenerateFormError for m == n.
LieSuperalgebra build_sl(int m, int n, const Rational& form_scale = Rational(1));

/// Square supermatrix of size m+n used to realize gl(m|n) and its
/// subalgebras; exposed so tests can run matrix-level oracles.
struct SuperMatrix {
  int m = 0;
  int n = 0;
  RationalMatrix entries;

  static SuperMatrix zero(int m, int n);
  static SuperMatrix unit(int m, int n, int row, int col);  // 0-based
  int size() const { return m + n; }
  Parity index_parity(int i) const { return i < m ? Parity::even : Parity::odd; }

  SuperMatrix operator*(const SuperMatrix& rhs) const;
  SuperMatrix operator+(const SuperMatrix& rhs) const;
  SuperMatrix operator-(const SuperMatrix& rhs) const;
  SuperMatrix scaled(const Rational& c) const;
  Rational supertrace() const;
  bool is_zero() const;
  /// Parity of a homogeneous supermatrix; throws std::invalid_argument otherwise.
  Parity parity() const;
};

/// XY - (-1)^{|X||Y|} YX for homogeneous X, Y.
SuperMatrix supercommutator(const SuperMatrix& x, const SuperMatrix& y);

/// The supermatrix realizing each basis vector of a build_gl / build_sl algebra.
std::vector<SuperMatrix> matrix_realization(const std::string& family, int m, int n);

}  // namespace sdyn
