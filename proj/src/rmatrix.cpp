#include "sdyn/rmatrix.hpp"

#include "sdyn/casimir.hpp"
#include "sdyn/errors.hpp"

#include <stdexcept>

namespace sdyn {

RootSubset RootSubset::all(const RootDatum& rd) {
  RootSubset s;
  s.members_.assign(static_cast<std::size_t>(rd.size()), true);
  return s;
}

RootSubset RootSubset::none(const RootDatum& rd) {
  RootSubset s;
  s.members_.assign(static_cast<std::size_t>(rd.size()), false);
  return s;
}

RootSubset RootSubset::of(const RootDatum& rd, const std::vector<int>& indices) {
  RootSubset s = none(rd);
  for (int a : indices) {
    if (a < 0 || a >= rd.size()) throw std::out_of_range("root index " + std::to_string(a) + " out of range");
    s.members_[static_cast<std::size_t>(a)] = true;
  }
  return s;
}

std::vector<int> RootSubset::indices() const {
  std::vector<int> out;
  for (std::size_t a = 0; a < members_.size(); ++a)
    if (members_[a]) out.push_back(static_cast<int>(a));
  return out;
}

TwoForm TwoForm::zero(int rank) {
  TwoForm f;
  f.d.assign(static_cast<std::size_t>(rank), std::vector<RationalFunction>(static_cast<std::size_t>(rank)));
  return f;
}

bool TwoForm::is_zero() const {
  for (const auto& row : d)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

void TwoForm::set_antisymmetric(int i, int j, const RationalFunction& f) {
  d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = f;
  d[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -f;
}

namespace {

std::string root_ref(const RootDatum& rd, int a) {
  return "root " + std::to_string(a) + (rd.root(a).positive ? " (positive)" : " (negative)");
}

const RationalFunction& entry(const TwoForm& D, int i, int j) {
  return D.d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

}  // namespace

ValidationReport validate(const RMatrixSpec& spec, const RootDatum& rd) {
  ValidationReport rep;
  const int n = rd.rank();
  if (static_cast<int>(spec.X.root_count()) != rd.size())
    rep.failures.push_back("X refers to " + std::to_string(spec.X.root_count()) + " roots, algebra has " +
                           std::to_string(rd.size()));
  if (static_cast<int>(spec.nu.size()) != n)
    rep.failures.push_back("nu has " + std::to_string(spec.nu.size()) + " entries, rank is " + std::to_string(n));
  if (spec.D.rank() != n)
    rep.failures.push_back("D is " + std::to_string(spec.D.rank()) + "x" + std::to_string(spec.D.rank()) +
                           ", rank is " + std::to_string(n));
  if (!rep.passed()) return rep;

  for (int a : spec.X.indices()) {
    if (!spec.X.contains(rd.negative(a)))
      rep.failures.push_back("X not closed under negation: contains " + root_ref(rd, a) + " but not its negative " +
                             root_ref(rd, rd.negative(a)));
    for (int b : spec.X.indices()) {
      auto c = rd.sum(a, b);
      if (c && !spec.X.contains(*c))
        rep.failures.push_back("X not closed under addition: roots " + std::to_string(a) + " + " +
                               std::to_string(b) + " = root " + std::to_string(*c) + " not in X");
    }
  }

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (!(entry(spec.D, i, j) + entry(spec.D, j, i)).is_zero())
        rep.failures.push_back("D not antisymmetric: D_" + std::to_string(i) + std::to_string(j) + " + D_" +
                               std::to_string(j) + std::to_string(i) + " = " +
                               (entry(spec.D, i, j) + entry(spec.D, j, i)).to_string());

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        RationalFunction dD = entry(spec.D, j, k).derivative(i) + entry(spec.D, k, i).derivative(j) +
                              entry(spec.D, i, j).derivative(k);
        if (!dD.is_zero())
          rep.failures.push_back("D not closed: dD on (x" + std::to_string(i) + ", x" + std::to_string(j) + ", x" +
                                 std::to_string(k) + ") = " + dD.to_string());
      }

  if (spec.epsilon != 0) {
    for (int a = 0; a < rd.size(); ++a) {
      bool needed = rd.root(a).positive && !spec.X.contains(a);
      bool given = spec.sign_choice.count(a) > 0;
      if (needed && !given) rep.failures.push_back("sign_choice missing for " + root_ref(rd, a));
      if (!needed && given) rep.failures.push_back("sign_choice given for " + root_ref(rd, a) +
                                                   ", which is negative or in X");
    }
    for (const auto& [a, s] : spec.sign_choice) {
      if (a < 0 || a >= rd.size()) rep.failures.push_back("sign_choice for unknown root " + std::to_string(a));
      if (s != 1 && s != -1) rep.failures.push_back("sign_choice for root " + std::to_string(a) + " must be +1 or -1");
    }
  }
  return rep;
}

Polynomial shifted_pairing(int a, const RationalVector& nu, const RootDatum& rd) {
  const RationalVector& c = rd.coroot_coordinates(a);
  Rational shift(0);
  for (std::size_t i = 0; i < c.size() && i < nu.size(); ++i) shift -= c[i] * nu[i];
  return Polynomial::affine(c, shift);
}

ScalarExpr phi_zero_coupling(int a, const RMatrixSpec& spec, const RootDatum& rd) {
  const Root& r = rd.root(a);
  Rational num = rd.pairing(a) * (r.parity == Parity::odd ? -1 : 1);
  return ScalarExpr(RationalFunction(Polynomial(num), shifted_pairing(a, spec.nu, rd)));
}

ScalarExpr phi_coupled(int a, const RMatrixSpec& spec, const RootDatum& rd) {
  const Root& r = rd.root(a);
  const Rational half = spec.epsilon / 2;
  const int parity_sign = r.parity == Parity::odd ? -1 : 1;
  if (spec.X.contains(a)) {
    Rational k = parity_sign * rd.pairing(a) * half;
    const RationalVector& c = rd.coroot_coordinates(a);
    std::vector<Rational> linear;
    Rational constant(0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      linear.push_back(k * c[i]);
      if (i < spec.nu.size()) constant -= k * c[i] * spec.nu[i];
    }
    return ScalarExpr(half) * ScalarExpr::coth(std::move(linear), constant);
  }
  const int pos = r.positive ? a : rd.negative(a);
  auto it = spec.sign_choice.find(pos);
  if (it == spec.sign_choice.end())
    throw MissingSignChoiceError("no sign_choice for positive root " + std::to_string(pos));
  const int sigma = it->second;
  if (r.positive) return ScalarExpr(Rational(-parity_sign * sigma) * half);
  return ScalarExpr(Rational(sigma) * half);
}

ScalarExpr phi(int a, const RMatrixSpec& spec, const RootDatum& rd) {
  if (spec.epsilon == 0) return spec.X.contains(a) ? phi_zero_coupling(a, spec, rd) : ScalarExpr();
  return phi_coupled(a, spec, rd);
}

Tensor2 root_pair(const RootDatum& rd, int a, const ScalarExpr& c) {
  Tensor2 out;
  const int na = rd.negative(a);
  const int i = rd.root(a).basis_index;
  const int j = rd.root(na).basis_index;
  Rational scale = rd.root_vector(a)[static_cast<std::size_t>(i)] * rd.root_vector(na)[static_cast<std::size_t>(j)];
  out.add({i, j}, scale == 1 ? c : ScalarExpr(scale) * c);
  return out;
}

Tensor2 cartan_part(const TwoForm& D, const LieSuperalgebra& g) {
  Tensor2 out;
  const auto cartan = g.cartan_indices();
  for (int i = 0; i < D.rank(); ++i)
    for (int j = 0; j < D.rank(); ++j)
      out.add({cartan[static_cast<std::size_t>(i)], cartan[static_cast<std::size_t>(j)]}, ScalarExpr(entry(D, i, j)));
  return out;
}

Tensor2 construct(const RMatrixSpec& spec, const LieSuperalgebra& g, const RootDatum& rd) {
  auto rep = validate(spec, rd);
  if (!rep.passed()) {
    std::string msg = "r-matrix data is invalid:";
    for (const auto& f : rep.failures) msg += "\n  " + f;
    throw ValidationError(msg);
  }
  Tensor2 r = cartan_part(spec.D, g);
  if (spec.epsilon != 0) r += ScalarExpr(spec.epsilon / 2) * casimir(g, rd);
  for (int a = 0; a < rd.size(); ++a) {
    ScalarExpr c = phi(a, spec, rd);
    if (!c.is_exact_zero()) r += root_pair(rd, a, c);
  }
  return r;
}

Tensor2 constant_example(const LieSuperalgebra& g, const RootDatum& rd, const Rational& epsilon,
                         ConstantExample which) {
  Tensor2 out;
  const auto cartan = g.cartan_indices();
  const auto& ginv = rd.cartan_gram_inverse();
  for (std::size_t k = 0; k < cartan.size(); ++k)
    for (std::size_t j = 0; j < cartan.size(); ++j)
      out.add({cartan[k], cartan[j]}, ScalarExpr(epsilon / 2 * ginv[j][k]));
  for (int a = 0; a < rd.size(); ++a) {
    if (!rd.root(a).positive) continue;
    if (which == ConstantExample::r) {
      out += root_pair(rd, rd.negative(a), ScalarExpr(epsilon));
    } else {
      Rational c = rd.root(a).parity == Parity::odd ? Rational(-epsilon) : epsilon;
      out += root_pair(rd, a, ScalarExpr(c));
    }
  }
  return out;
}

Tensor2 shift_to_s(const Tensor2& r, const Rational& epsilon, const Tensor2& omega) {
  return r - ScalarExpr(epsilon / 2) * omega;
}

}  // namespace sdyn
