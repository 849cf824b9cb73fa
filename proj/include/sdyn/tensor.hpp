#pragma once

#include "sdyn/scalar_expr.hpp"
#include "sdyn/superalgebra.hpp"

#include <array>
#include <map>
#include <vector>

namespace sdyn {

/// Sparse element of g^{(x)R} with ScalarExpr coefficients, keyed by basis
/// index tuples. Exact-zero coefficients are never stored.
template <std::size_t R>
class SparseTensor {
 public:
  using Index = std::array<int, R>;
  using Terms = std::map<Index, ScalarExpr>;

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient at an index (zero when absent).
  ScalarExpr at(const Index& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? ScalarExpr() : it->second;
  }

  void add(const Index& idx, const ScalarExpr& c) {
    if (c.is_exact_zero()) return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_exact_zero()) terms_.erase(it);
    }
  }

  SparseTensor& operator+=(const SparseTensor& rhs) {
    for (const auto& [idx, c] : rhs.terms_) add(idx, c);
    return *this;
  }
  SparseTensor& operator-=(const SparseTensor& rhs) {
    for (const auto& [idx, c] : rhs.terms_) add(idx, -c);
    return *this;
  }
  friend SparseTensor operator+(SparseTensor a, const SparseTensor& b) { return a += b; }
  friend SparseTensor operator-(SparseTensor a, const SparseTensor& b) { return a -= b; }
  friend SparseTensor operator*(const ScalarExpr& c, const SparseTensor& t) {
    SparseTensor out;
    if (c.is_exact_zero()) return out;
    for (const auto& [idx, v] : t.terms_) out.add(idx, c * v);
    return out;
  }
  SparseTensor operator-() const { return ScalarExpr(-1) * *this; }

  friend bool operator==(const SparseTensor& a, const SparseTensor& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

using Tensor2 = SparseTensor<2>;
using Tensor3 = SparseTensor<3>;

/// Constant Tensor2 from a dim x dim coefficient matrix.
Tensor2 tensor_from_matrix(const RationalMatrix& m);

/// a (x) b -> (-1)^{|a||b|} b (x) a
Tensor2 super_twist(const Tensor2& t, const LieSuperalgebra& g);

/// Leg brackets for r = sum a (x) b, s = sum a' (x) b':
///   [r12, s13] = sum (-1)^{|b||a'|} [a, a'] (x) b (x) b'
///   [r12, s23] = sum a (x) [b, a'] (x) b'
///   [r13, s23] = sum (-1)^{|b||a'|} a (x) a' (x) [b, b']
Tensor3 bracket_12_13(const Tensor2& r, const Tensor2& s, const LieSuperalgebra& g);
Tensor3 bracket_12_23(const Tensor2& r, const Tensor2& s, const LieSuperalgebra& g);
Tensor3 bracket_13_23(const Tensor2& r, const Tensor2& s, const LieSuperalgebra& g);

/// [[r, r]] = [r12, r13] + [r12, r23] + [r13, r23]
Tensor3 yb_bracket(const Tensor2& r, const LieSuperalgebra& g);

/// a(x)b(x)c + (-1)^{|a|(|b|+|c|)} b(x)c(x)a + (-1)^{|c|(|a|+|b|)} c(x)a(x)b
Tensor3 alt_s(const Tensor3& t, const LieSuperalgebra& g);

enum class LegSwap { p12, p13, p23 };

/// (12)_s: (-1)^{|a||b|} b(x)a(x)c
/// (13)_s: (-1)^{|a||b|+|a||c|+|b||c|} c(x)b(x)a
/// (23)_s: (-1)^{|b||c|} a(x)c(x)b
Tensor3 signed_permutation(const Tensor3& t, LegSwap p, const LieSuperalgebra& g);

/// Diagonal action z.(a(x)b) = [z,a](x)b + a(x)[z,b] of an even z; throws
/// OddActorError for odd z.
Tensor2 ad_action(const GVector& z, const Tensor2& t, const LieSuperalgebra& g);
Tensor3 ad_action(const GVector& z, const Tensor3& t, const LieSuperalgebra& g);

template <std::size_t R>
SparseTensor<R> differentiate(const SparseTensor<R>& t, int var) {
  SparseTensor<R> out;
  for (const auto& [idx, c] : t.terms()) out.add(idx, c.differentiate(var));
  return out;
}

/// Test hook: while alive on the current thread, bracket_12_13 drops its
/// Koszul sign. Used only to check that the verifier notices.
class ScopedKoszulFault {
 public:
  ScopedKoszulFault();
  ~ScopedKoszulFault();
  ScopedKoszulFault(const ScopedKoszulFault&) = delete;
  ScopedKoszulFault& operator=(const ScopedKoszulFault&) = delete;

 private:
  bool previous_;
};

}  // namespace sdyn
