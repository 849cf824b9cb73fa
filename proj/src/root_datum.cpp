#include "sdyn/root_datum.hpp"

#include "sdyn/errors.hpp"

#include <map>

namespace sdyn {

std::optional<int> RootDatum::find(const RationalVector& functional) const {
  for (int a = 0; a < size(); ++a)
    if (roots_[static_cast<std::size_t>(a)].functional == functional) return a;
  return std::nullopt;
}

std::optional<int> RootDatum::sum(int a, int b) const {
  RationalVector f = root(a).functional;
  for (std::size_t i = 0; i < f.size(); ++i) f[i] += root(b).functional[i];
  return find(f);
}

int RootDatum::sign_A(int a) const { return sdyn::sign_A(root(a)); }

Rational RootDatum::root_structure_constant(const LieSuperalgebra& g, int a, int b) const {
  auto c = sum(a, b);
  if (!c) return Rational(0);
  GVector br = g.bracket(root_vector(a), root_vector(b));
  const GVector& target = root_vector(*c);
  // e_c is a multiple of a single basis vector.
  int k = root(*c).basis_index;
  return br[static_cast<std::size_t>(k)] / target[static_cast<std::size_t>(k)];
}

RationalVector RootDatum::dominant_point(const LieSuperalgebra& g) const {
  RationalVector out;
  for (int x : g.cartan_indices()) out.push_back(g.form(g.regular_element(), g.basis_vector(x)));
  return out;
}

RootDatum root_decomposition(const LieSuperalgebra& g) {
  RootDatum rd;
  const auto cartan = g.cartan_indices();
  rd.rank_ = static_cast<int>(cartan.size());

  // Weight of every non-Cartan basis vector.
  std::map<RationalVector, int> by_weight;
  for (int k = 0; k < g.dim(); ++k) {
    if (g.is_cartan(k)) continue;
    RationalVector weight;
    for (int x : cartan) {
      Rational w(0);
      for (const auto& t : g.bracket_terms(x, k)) {
        if (t.index != k) {
          throw NonDiagonalizableError("basis vector " + g.label(k) + " is not an eigenvector of ad " +
                                       g.label(x));
        }
        w = t.coefficient;
      }
      weight.push_back(w);
    }
    bool zero = true;
    for (const auto& w : weight) zero = zero && w == 0;
    if (zero) throw NonDiagonalizableError("basis vector " + g.label(k) + " has weight zero");
    if (!by_weight.emplace(weight, k).second) {
      throw NonDiagonalizableError("root space of " + g.label(k) + " is not one-dimensional");
    }
    Rational on_regular(0);
    for (std::size_t i = 0; i < cartan.size(); ++i)
      on_regular += weight[i] * g.regular_element()[static_cast<std::size_t>(cartan[i])];
    if (on_regular == 0) throw NonDiagonalizableError("regular element is not regular for " + g.label(k));
    rd.roots_.push_back(Root{weight, g.parity(k), on_regular > 0, k});
  }

  rd.gram_.assign(cartan.size(), RationalVector(cartan.size(), Rational(0)));
  for (std::size_t i = 0; i < cartan.size(); ++i)
    for (std::size_t j = 0; j < cartan.size(); ++j) rd.gram_[i][j] = g.form(cartan[i], cartan[j]);
  auto inv = inverse(rd.gram_);
  if (!inv) throw DegenerateFormError("the form restricted to the Cartan subalgebra is degenerate");
  rd.gram_inverse_ = *inv;

  const int count = rd.size();
  rd.negative_.assign(static_cast<std::size_t>(count), -1);
  for (int a = 0; a < count; ++a) {
    RationalVector neg = rd.root(a).functional;
    for (auto& x : neg) x = -x;
    auto b = rd.find(neg);
    if (!b) throw NonDiagonalizableError("root of " + g.label(rd.root(a).basis_index) + " has no negative");
    rd.negative_[static_cast<std::size_t>(a)] = *b;
  }

  rd.e_.resize(static_cast<std::size_t>(count));
  for (int a = 0; a < count; ++a) {
    const Root& r = rd.root(a);
    if (r.positive) {
      rd.e_[static_cast<std::size_t>(a)] = g.basis_vector(r.basis_index);
    } else {
      int pos_basis = rd.root(rd.negative(a)).basis_index;
      Rational p = g.form(pos_basis, r.basis_index);
      if (p == 0) throw DegenerateFormError("root spaces of " + g.label(pos_basis) + " are not paired");
      GVector v = g.basis_vector(r.basis_index);
      v[static_cast<std::size_t>(r.basis_index)] = 1 / p;
      rd.e_[static_cast<std::size_t>(a)] = std::move(v);
    }
  }

  for (int a = 0; a < count; ++a) {
    rd.pairing_.push_back(g.form(rd.root_vector(a), rd.root_vector(rd.negative(a))));
    RationalVector coords = multiply(rd.gram_inverse_, rd.root(a).functional);
    GVector h(static_cast<std::size_t>(g.dim()), Rational(0));
    for (std::size_t i = 0; i < cartan.size(); ++i) h[static_cast<std::size_t>(cartan[i])] = coords[i];
    rd.coroot_coords_.push_back(std::move(coords));
    rd.coroot_.push_back(std::move(h));
  }
  return rd;
}

}  // namespace sdyn
