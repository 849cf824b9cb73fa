#pragma once

#include "sdyn/superalgebra.hpp"

#include <optional>
#include <vector>

namespace sdyn {

struct Root {
  /// Values alpha(x_i) on the Cartan basis.
  RationalVector functional;
  Parity parity = Parity::even;
  bool positive = false;
  /// Basis vector spanning the root space.
  int basis_index = -1;
};

/// Roots of g relative to its Cartan basis together with the normalized root
/// vectors and coroots used by the r-matrix constructions:
///   (e_a, e_-a) = 1 for positive a,
///   [e_a, e_-a] = (e_a, e_-a) h_a,   (h_a, x) = a(x) for Cartan x.
/// Roots are indexed by ascending basis index of their root vector; this
/// ordering is what spec files refer to.
class RootDatum {
 public:
  int size() const noexcept { return static_cast<int>(roots_.size()); }
  int rank() const noexcept { return rank_; }

  const Root& root(int a) const { return roots_[static_cast<std::size_t>(a)]; }
  const std::vector<Root>& roots() const noexcept { return roots_; }

  /// Index of -root(a).
  int negative(int a) const { return negative_[static_cast<std::size_t>(a)]; }
  /// Index of the root with the given functional, if any.
  std::optional<int> find(const RationalVector& functional) const;
  /// Index of root(a) + root(b) when that is a root.
  std::optional<int> sum(int a, int b) const;

  const GVector& root_vector(int a) const { return e_[static_cast<std::size_t>(a)]; }
  /// h_a as an element of g.
  const GVector& coroot(int a) const { return coroot_[static_cast<std::size_t>(a)]; }
  /// h_a in the Cartan basis; also the coefficients of the linear function
  /// lambda -> (a, lambda) = lambda(h_a) in the coordinates lambda_i = lambda(x_i).
  const RationalVector& coroot_coordinates(int a) const { return coroot_coords_[static_cast<std::size_t>(a)]; }
  /// (e_a, e_-a)
  const Rational& pairing(int a) const { return pairing_[static_cast<std::size_t>(a)]; }

  /// Gram matrix (x_i, x_j) of the Cartan basis and its inverse.
  const RationalMatrix& cartan_gram() const noexcept { return gram_; }
  const RationalMatrix& cartan_gram_inverse() const noexcept { return gram_inverse_; }

  /// A_a = (-1)^{|a|} for positive a, 1 for negative a.
  int sign_A(int a) const;

  /// Coefficient C with [e_a, e_b] = C e_{a+b} (zero when a+b is not a root).
  Rational root_structure_constant(const LieSuperalgebra& g, int a, int b) const;

  /// lambda_0 with lambda_0(x_i) = (rho, x_i) for the algebra's regular
  /// element rho, so (a, lambda_0) = a(rho) > 0 for every positive root.
  RationalVector dominant_point(const LieSuperalgebra& g) const;

  friend RootDatum root_decomposition(const LieSuperalgebra& g);

 private:
  int rank_ = 0;
  std::vector<Root> roots_;
  std::vector<int> negative_;
  std::vector<GVector> e_;
  std::vector<GVector> coroot_;
  std::vector<RationalVector> coroot_coords_;
  std::vector<Rational> pairing_;
  RationalMatrix gram_;
  RationalMatrix gram_inverse_;
};

/// Throws NonDiagonalizableError when a non-Cartan basis vector is not an
/// ad-eigenvector of the Cartan, has weight zero, or shares its weight with
/// another basis vector; DegenerateFormError when the Cartan Gram matrix is
/// singular or a root pairing vanishes.
RootDatum root_decomposition(const LieSuperalgebra& g);

/// A_a for a root given by its sign data.
inline int sign_A(const Root& root) {
  return root.positive && root.parity == Parity::odd ? -1 : 1;
}

}  // namespace sdyn
