#pragma once

#include "sdyn/root_datum.hpp"

#include <string>

namespace sdyn {

/// Outcome of a brute-force identity check over basis elements.
struct AlgebraCheck {
  std::string name;
  bool passed = true;
  /// First violation found, empty when passed.
  std::string witness;
  /// Number of basis tuples / root pairs examined.
  long cases = 0;
  /// Free-form observations that are not failures.
  std::string note;
};

AlgebraCheck check_super_skew_symmetry(const LieSuperalgebra& g);
AlgebraCheck check_parity_consistency(const LieSuperalgebra& g);
AlgebraCheck check_super_jacobi(const LieSuperalgebra& g);
/// Supersymmetric, even, invariant and nondegenerate.
AlgebraCheck check_invariant_form(const LieSuperalgebra& g);
AlgebraCheck check_cartan(const LieSuperalgebra& g);
/// Root-vector property, normalization and the coroot relation.
AlgebraCheck check_root_datum(const LieSuperalgebra& g, const RootDatum& rd);
/// The three identities expressing C_{-b,a+b}^a, C_{-a,a+b}^b and
/// C_{-a,-b}^{-a-b} through (h_a, h_b) / C_{a,b}^{a+b}. Pairs with
/// (h_a, h_b) = 0 are counted in the note.
AlgebraCheck check_structure_constant_identities(const LieSuperalgebra& g, const RootDatum& rd);

/// Omega = sum_i x_i (x) x^i + sum_a A_a e_a (x) e_-a as a dim x dim
/// coefficient matrix in the basis b_i (x) b_j.
RationalMatrix casimir_matrix(const LieSuperalgebra& g, const RootDatum& rd);

/// [z (x) 1 + 1 (x) z, Omega] = 0 for every basis z, odd ones included, with
/// the Koszul sign on the second leg.
AlgebraCheck check_casimir_invariance(const LieSuperalgebra& g, const RationalMatrix& omega);

}  // namespace sdyn
