#include "sdyn/tensor.hpp"

#include "sdyn/errors.hpp"

namespace sdyn {

namespace {

thread_local bool koszul_fault = false;

int sign(const LieSuperalgebra& g, int i, int j) { return koszul(g.parity(i), g.parity(j)); }

ScalarExpr scaled(const ScalarExpr& c, const Rational& k) {
  return k == 1 ? c : ScalarExpr(k) * c;
}

}  // namespace

ScopedKoszulFault::ScopedKoszulFault() : previous_(koszul_fault) { koszul_fault = true; }
ScopedKoszulFault::~ScopedKoszulFault() { koszul_fault = previous_; }

Tensor2 tensor_from_matrix(const RationalMatrix& m) {
  Tensor2 out;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != 0) out.add({static_cast<int>(i), static_cast<int>(j)}, ScalarExpr(m[i][j]));
  return out;
}

Tensor2 super_twist(const Tensor2& t, const LieSuperalgebra& g) {
  Tensor2 out;
  for (const auto& [idx, c] : t.terms()) {
    auto [i, j] = idx;
    out.add({j, i}, sign(g, i, j) < 0 ? -c : c);
  }
  return out;
}

Tensor3 bracket_12_13(const Tensor2& r, const Tensor2& s, const LieSuperalgebra& g) {
  Tensor3 out;
  for (const auto& [ri, rc] : r.terms()) {
    auto [a, b] = ri;
    for (const auto& [si, sc] : s.terms()) {
      auto [a2, b2] = si;
      auto br = g.bracket_terms(a, a2);
      if (br.empty()) continue;
      ScalarExpr c = rc * sc;
      if (!koszul_fault && sign(g, b, a2) < 0) c = -c;
      for (const auto& t : br) out.add({t.index, b, b2}, scaled(c, t.coefficient));
    }
  }
  return out;
}

Tensor3 bracket_12_23(const Tensor2& r, const Tensor2& s, const LieSuperalgebra& g) {
  Tensor3 out;
  for (const auto& [ri, rc] : r.terms()) {
    auto [a, b] = ri;
    for (const auto& [si, sc] : s.terms()) {
      auto [a2, b2] = si;
      auto br = g.bracket_terms(b, a2);
      if (br.empty()) continue;
      ScalarExpr c = rc * sc;
      for (const auto& t : br) out.add({a, t.index, b2}, scaled(c, t.coefficient));
    }
  }
  return out;
}

Tensor3 bracket_13_23(const Tensor2& r, const Tensor2& s, const LieSuperalgebra& g) {
  Tensor3 out;
  for (const auto& [ri, rc] : r.terms()) {
    auto [a, b] = ri;
    for (const auto& [si, sc] : s.terms()) {
      auto [a2, b2] = si;
      auto br = g.bracket_terms(b, b2);
      if (br.empty()) continue;
      ScalarExpr c = rc * sc;
      if (sign(g, b, a2) < 0) c = -c;
      for (const auto& t : br) out.add({a, a2, t.index}, scaled(c, t.coefficient));
    }
  }
  return out;
}

Tensor3 yb_bracket(const Tensor2& r, const LieSuperalgebra& g) {
  Tensor3 out = bracket_12_13(r, r, g);
  out += bracket_12_23(r, r, g);
  out += bracket_13_23(r, r, g);
  return out;
}

Tensor3 alt_s(const Tensor3& t, const LieSuperalgebra& g) {
  Tensor3 out;
  for (const auto& [idx, c] : t.terms()) {
    auto [a, b, cc] = idx;
    const int pa = bit(g.parity(a)), pb = bit(g.parity(b)), pc = bit(g.parity(cc));
    out.add({a, b, cc}, c);
    out.add({b, cc, a}, (pa * (pb + pc)) % 2 ? -c : c);
    out.add({cc, a, b}, (pc * (pa + pb)) % 2 ? -c : c);
  }
  return out;
}

Tensor3 signed_permutation(const Tensor3& t, LegSwap p, const LieSuperalgebra& g) {
  Tensor3 out;
  for (const auto& [idx, c] : t.terms()) {
    auto [a, b, cc] = idx;
    switch (p) {
      case LegSwap::p12:
        out.add({b, a, cc}, sign(g, a, b) < 0 ? -c : c);
        break;
      case LegSwap::p23:
        out.add({a, cc, b}, sign(g, b, cc) < 0 ? -c : c);
        break;
      case LegSwap::p13: {
        int s = sign(g, a, b) * sign(g, a, cc) * sign(g, b, cc);
        out.add({cc, b, a}, s < 0 ? -c : c);
        break;
      }
    }
  }
  return out;
}

namespace {

void require_even(const GVector& z, const LieSuperalgebra& g) {
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i] != 0 && g.parity(static_cast<int>(i)) == Parity::odd)
      throw OddActorError("ad_action is defined for even actors only; " + g.describe(z) + " has an odd component");
}

/// ad_z(b_i) as sparse terms.
std::vector<StructureTerm> ad(const GVector& z, int i, const LieSuperalgebra& g) {
  std::map<int, Rational> acc;
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (z[k] == 0) continue;
    for (const auto& t : g.bracket_terms(static_cast<int>(k), i)) acc[t.index] += z[k] * t.coefficient;
  }
  std::vector<StructureTerm> out;
  for (const auto& [idx, c] : acc)
    if (c != 0) out.push_back({idx, c});
  return out;
}

template <std::size_t R>
SparseTensor<R> ad_action_impl(const GVector& z, const SparseTensor<R>& t, const LieSuperalgebra& g) {
  require_even(z, g);
  SparseTensor<R> out;
  for (const auto& [idx, c] : t.terms())
    for (std::size_t leg = 0; leg < R; ++leg)
      for (const auto& term : ad(z, idx[leg], g)) {
        auto moved = idx;
        moved[leg] = term.index;
        out.add(moved, scaled(c, term.coefficient));
      }
  return out;
}

}  // namespace

Tensor2 ad_action(const GVector& z, const Tensor2& t, const LieSuperalgebra& g) { return ad_action_impl(z, t, g); }
Tensor3 ad_action(const GVector& z, const Tensor3& t, const LieSuperalgebra& g) { return ad_action_impl(z, t, g); }

}  // namespace sdyn
