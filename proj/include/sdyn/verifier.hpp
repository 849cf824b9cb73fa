#pragma once

#include "sdyn/rmatrix.hpp"
#include "sdyn/scalar_expr.hpp"
#include "sdyn/tensor.hpp"

#include <string>
#include <vector>

namespace sdyn {

/// Outcome of one residual check.
///   exact-zero:   every coefficient cancels symbolically
///   numeric-zero: all sampled values below tolerance (sampled evidence only)
///   nonzero:      `witness` names a surviving term, `sample_point` where it
///                 is nonzero (when a point was needed)
struct ResidualReport {
  std::string check;
  ZeroStatus status = ZeroStatus::exact_zero;
  double max_abs = 0.0;
  int points = 0;
  std::string witness;
  std::string sample_point;
  std::string note;
  double seconds = 0.0;

  bool passed() const { return status != ZeroStatus::nonzero; }
};

/// Decides whether every coefficient of t vanishes. Coth-free coefficients
/// and coefficients that cancel with atoms as indeterminates are decided
/// exactly; the rest are sampled jointly at options.points lattice points.
template <std::size_t R>
ResidualReport decide(const std::string& check, const SparseTensor<R>& t, const LieSuperalgebra& g,
                      const SamplingOptions& options);

/// sum_i x_i (x) dr/dx_i, first leg in the Cartan.
Tensor3 differential_dr(const Tensor2& r, const LieSuperalgebra& g);

struct Residual3 {
  Tensor3 tensor;
  ResidualReport report;
};
struct Residual2 {
  Tensor2 tensor;
  ResidualReport report;
};

/// Alt_s(dr) + [[r, r]]
Residual3 cdybe_residual(const Tensor2& r, const LieSuperalgebra& g, const SamplingOptions& options);
/// r + T_s r - eps Omega
Residual2 unitarity_residual(const Tensor2& r, const Rational& epsilon, const Tensor2& omega,
                             const LieSuperalgebra& g, const SamplingOptions& options);
/// [x (x) 1 + 1 (x) x, r] for every Cartan basis vector x.
ResidualReport zero_weight_residual(const Tensor2& r, const LieSuperalgebra& g, const SamplingOptions& options);
/// Alt_s(ds) + [[s, s]] + (eps^2/4) [[Omega, Omega]]
Residual3 mdybe_residual(const Tensor2& s, const Rational& epsilon, const Tensor2& omega,
                         const LieSuperalgebra& g, const SamplingOptions& options);

/// [s12,O13] + [O12,s13] + [s12,O23] + [O12,s23] + [s13,O23] + [O13,s23]
Tensor3 cross_bracket(const Tensor2& s, const Tensor2& omega, const LieSuperalgebra& g);

/// Requires r + T_s r = eps Omega (PreconditionError otherwise). Passes when
/// the CDYBE residual of r and the modified residual of s = r - (eps/2)Omega
/// are both zero or both nonzero and the cross bracket of s and Omega is
/// exactly zero.
ResidualReport lemma_consistency_check(const Tensor2& r, const Rational& epsilon, const Tensor2& omega,
                                       const LieSuperalgebra& g, const SamplingOptions& options);

/// Along (t / eps) * lambda_0 with lambda_0 strictly dominant, compares the coupled
/// X = all solution with T_s r of the constant example for t in {10, 20, 40}
/// and with r for t in {-10, -20, -40}. Passes when the coefficientwise error
/// decreases with |t| and is below `limit_tolerance` at |t| = 40.
ResidualReport limit_behavior_check(const RMatrixSpec& spec, const LieSuperalgebra& g, const RootDatum& rd,
                                    const SamplingOptions& options, double limit_tolerance = 1e-15);

/// Coupled solution at each epsilon against the zero-coupling solution with the
/// same X, nu and D, at `points` lattice points. The largest coefficientwise
/// error e(eps) must shrink with eps and e(eps)/eps must not grow by more than
/// a factor 2 from the largest to the smallest eps. The note lists C = e/eps.
/// The spec's own epsilon is ignored; sign_choice must cover the positive
/// roots outside X.
ResidualReport degeneration_check(const RMatrixSpec& spec, const LieSuperalgebra& g, const RootDatum& rd,
                                  const SamplingOptions& options,
                                  const std::vector<Rational>& epsilons = {Rational(1, 1000), Rational(1, 10000),
                                                                           Rational(1, 100000), Rational(1, 1000000)},
                                  int points = 3);

/// dphi_a + A_a phi_a^2 dh_a = 0 (eps = 0) or dphi_a + A_a (phi_a^2 - eps^2/4) dh_a = 0,
/// for every a in X, decided exactly.
ResidualReport ode_check(const RMatrixSpec& spec, const RootDatum& rd, const SamplingOptions& options);

/// A_{a+b} phi_a phi_b + (eps^2/4) A_{a+b} A_a A_b - phi_{a+b} (A_a phi_b + A_b phi_a) = 0
/// for every pair of roots whose sum is a root.
ResidualReport functional_equation_check(const RMatrixSpec& spec, const RootDatum& rd,
                                         const SamplingOptions& options);

/// Validation of the spec as a report (nonzero status when it fails).
ResidualReport validation_check(const RMatrixSpec& spec, const RootDatum& rd);

/// Human readable "E12 (x) E21 (x) E11".
template <std::size_t R>
std::string index_label(const std::array<int, R>& idx, const LieSuperalgebra& g) {
  std::string out;
  for (std::size_t k = 0; k < R; ++k) out += (k ? " (x) " : "") + g.label(idx[k]);
  return out;
}

}  // namespace sdyn
