#pragma once

#include "sdyn/rational_function.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sdyn {

/// Argument of a coth atom: the affine form  sum_i linear[i]*x_i + constant.
///
/// Stored normalized: trailing zero coefficients are trimmed and the sign is
/// chosen so the first nonzero linear coefficient (or, failing that, the
/// constant) is positive. coth is odd, so the dropped sign moves into the
/// coefficient of the term that uses the atom.
struct CothArgument {
  std::vector<Rational> linear;
  Rational constant;

  Polynomial as_polynomial() const;
  std::string to_string() const;

  friend bool operator==(const CothArgument& a, const CothArgument& b) {
    return a.linear == b.linear && a.constant == b.constant;
  }
};

/// Total order used to key atoms.
bool operator<(const CothArgument& a, const CothArgument& b);

enum class ZeroStatus { exact_zero, probably_zero, nonzero };

const char* to_string(ZeroStatus status);

/// Controls the numeric fallback used for coth-bearing expressions.
struct SamplingOptions {
  int points = 20;
  int precision_bits = 128;
  double tolerance = 1e-25;
  double pole_margin = 1e-6;
  int lattice_radius = 10;
  std::uint64_t seed = 0x5d1a0bu;
};

struct ZeroDecision {
  ZeroStatus status = ZeroStatus::exact_zero;
  /// Largest |value| seen while sampling (0 when decided symbolically).
  double max_abs = 0.0;
  int points_used = 0;
};

/// Meromorphic coefficient function on h*: a finite sum
///     sum_k  R_k(x) * coth(u_1)^{p_1} ... coth(u_m)^{p_m}
/// with rational functions R_k and affine arguments u_j. Distinct atoms are
/// treated as independent indeterminates, so this representation is
/// canonical for every identity that does not need the coth addition law.
/// Values are immutable in practice; all operations return new values.
class ScalarExpr {
 public:
  struct AtomPower {
    CothArgument argument;
    unsigned power = 1;
    friend bool operator==(const AtomPower&, const AtomPower&) = default;
  };
  using AtomMonomial = std::vector<AtomPower>;  // sorted by argument
  struct MonomialLess {
    bool operator()(const AtomMonomial& a, const AtomMonomial& b) const;
  };
  using Terms = std::map<AtomMonomial, RationalFunction, MonomialLess>;

  ScalarExpr() = default;
  ScalarExpr(RationalFunction f);  // NOLINT(google-explicit-constructor)
  ScalarExpr(const Rational& c) : ScalarExpr(RationalFunction(c)) {}  // NOLINT(google-explicit-constructor)
  ScalarExpr(long c) : ScalarExpr(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static ScalarExpr variable(int index);
  /// coth(sum_i linear[i] x_i + constant). Throws PoleError for coth(0).
  static ScalarExpr coth(std::vector<Rational> linear, const Rational& constant);

  const Terms& terms() const noexcept { return terms_; }
  bool is_exact_zero() const noexcept { return terms_.empty(); }
  bool has_coth() const;
  /// The expression as a rational function when it carries no coth atoms.
  std::optional<RationalFunction> as_rational() const;
  int max_variable() const;
  /// Distinct coth arguments that occur.
  std::vector<CothArgument> atoms() const;
  /// Denominators and coth arguments: the expression is regular wherever
  /// none of these polynomials vanishes.
  std::vector<Polynomial> singular_forms() const;

  ScalarExpr differentiate(int var) const;

  /// Throws NotRationalError if a coth atom is present, PoleError at a pole.
  Rational eval_exact(std::span<const Rational> point) const;
  /// Throws PoleError when a denominator or coth argument is within `margin`.
  BigFloat eval_numeric(std::span<const BigFloat> point, int precision_bits,
                        double margin = 1e-6) const;

  /// Exact for coth-free expressions and for expressions that cancel with
  /// atoms as indeterminates; otherwise decided by sampling.
  ZeroDecision is_zero(const SamplingOptions& options = {}) const;

  ScalarExpr& operator+=(const ScalarExpr& rhs);
  ScalarExpr& operator-=(const ScalarExpr& rhs);
  ScalarExpr& operator*=(const ScalarExpr& rhs);
  friend ScalarExpr operator+(ScalarExpr a, const ScalarExpr& b) { return a += b; }
  friend ScalarExpr operator-(ScalarExpr a, const ScalarExpr& b) { return a -= b; }
  friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
  ScalarExpr operator-() const;

  friend bool operator==(const ScalarExpr& a, const ScalarExpr& b) { return a.terms_ == b.terms_; }

  /// S-expression form, e.g.  (+ (ratfun "1" "x0 - 3") (* (ratfun "2" "1") (coth 1 0)))
  std::string to_sexpr() const;
  /// Parses the s-expression grammar produced by to_sexpr() (see sexpr.hpp).
  static ScalarExpr parse(const std::string& text);

 private:
  void add_term(const AtomMonomial& m, const RationalFunction& c);

  Terms terms_;
};

}  // namespace sdyn
