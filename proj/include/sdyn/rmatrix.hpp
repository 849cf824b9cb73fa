#pragma once

#include "sdyn/root_datum.hpp"
#include "sdyn/tensor.hpp"

#include <map>
#include <string>
#include <vector>

namespace sdyn {

/// Subset of the roots, by root index.
class RootSubset {
 public:
  RootSubset() = default;
  static RootSubset all(const RootDatum& rd);
  static RootSubset none(const RootDatum& rd);
  /// Throws std::out_of_range for an index outside [0, |roots|).
  static RootSubset of(const RootDatum& rd, const std::vector<int>& indices);

  bool contains(int a) const { return a >= 0 && a < static_cast<int>(members_.size()) && members_[static_cast<std::size_t>(a)]; }
  std::vector<int> indices() const;
  std::size_t root_count() const noexcept { return members_.size(); }

 private:
  std::vector<bool> members_;
};

/// Coefficients D_ij of a 2-form on h*, stored as a full rank x rank matrix.
struct TwoForm {
  std::vector<std::vector<RationalFunction>> d;

  static TwoForm zero(int rank);
  int rank() const { return static_cast<int>(d.size()); }
  bool is_zero() const;
  /// Sets D_ij = f and D_ji = -f.
  void set_antisymmetric(int i, int j, const RationalFunction& f);
};

struct RMatrixSpec {
  RootSubset X;
  /// nu(x_i), one entry per Cartan basis vector.
  RationalVector nu;
  TwoForm D;
  Rational epsilon;
  /// Positive root index -> +1 / -1, selecting the upper / lower sign of the
  /// +- / -+ rows for roots outside X. Ignored when epsilon = 0.
  std::map<int, int> sign_choice;
};

struct ValidationReport {
  bool passed() const { return failures.empty(); }
  /// One line per violated condition, naming the offending roots / indices.
  std::vector<std::string> failures;
};

/// Closure of X under negation and root addition, antisymmetry and
/// closedness of D, dimensions of nu and D, and (for epsilon != 0) that
/// sign_choice is defined exactly on the positive roots outside X.
ValidationReport validate(const RMatrixSpec& spec, const RootDatum& rd);

/// lambda -> (a, lambda - nu) as an affine form in the Cartan coordinates.
Polynomial shifted_pairing(int a, const RationalVector& nu, const RootDatum& rd);

/// (-1)^{|a|} (e_a, e_-a) / (a, lambda - nu)
ScalarExpr phi_zero_coupling(int a, const RMatrixSpec& spec, const RootDatum& rd);

/// a in X:     (eps/2) coth((-1)^{|a|} (e_a, e_-a) (eps/2) (a, lambda - nu))
/// a not in X: eps/2 * sigma for negative a, -(-1)^{|a|} eps/2 * sigma for
///             positive a, sigma = sign_choice of the positive root.
/// Throws MissingSignChoiceError when sigma is not given.
ScalarExpr phi_coupled(int a, const RMatrixSpec& spec, const RootDatum& rd);

/// phi_zero_coupling / phi_coupled by the sign of epsilon; zero for a not in
/// X when epsilon = 0.
ScalarExpr phi(int a, const RMatrixSpec& spec, const RootDatum& rd);

/// c * e_a (x) e_-a
Tensor2 root_pair(const RootDatum& rd, int a, const ScalarExpr& c);

/// sum_ij D_ij x_i (x) x_j
Tensor2 cartan_part(const TwoForm& D, const LieSuperalgebra& g);

/// Zero coupling: sum D_ij x_i (x) x_j + sum_{a in X} phi_a e_a (x) e_-a.
/// Otherwise:     sum D_ij x_i (x) x_j + (eps/2) Omega + sum_a phi_a e_a (x) e_-a.
/// Throws ValidationError when validate() fails.
Tensor2 construct(const RMatrixSpec& spec, const LieSuperalgebra& g, const RootDatum& rd);

enum class ConstantExample { r, twisted };

/// r   = (eps/2) sum x_i (x) x^i + eps sum_{a>0} e_-a (x) e_a
/// T_s r = (eps/2) sum x_i (x) x^i + eps sum_{a>0} (-1)^{|a|} e_a (x) e_-a
Tensor2 constant_example(const LieSuperalgebra& g, const RootDatum& rd, const Rational& epsilon,
                         ConstantExample which);

/// s = r - (eps/2) Omega
Tensor2 shift_to_s(const Tensor2& r, const Rational& epsilon, const Tensor2& omega);

}  // namespace sdyn
