#include "sdyn/superalgebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sdyn {

LieSuperalgebra::LieSuperalgebra(std::string name, std::vector<std::string> labels,
                                 std::vector<Parity> parities,
                                 std::vector<std::vector<StructureTerm>> structure,
                                 RationalMatrix form, std::vector<int> cartan, GVector regular_element)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      parities_(std::move(parities)),
      structure_(std::move(structure)),
      form_(std::move(form)),
      cartan_(std::move(cartan)),
      regular_(std::move(regular_element)) {
  const auto d = parities_.size();
  if (labels_.size() != d || structure_.size() != d * d || form_.size() != d || regular_.size() != d) {
    throw std::invalid_argument("LieSuperalgebra: inconsistent dimensions");
  }
  for (int c : cartan_) {
    if (c < 0 || c >= dim() || parity(c) != Parity::even)
      throw std::invalid_argument("LieSuperalgebra: Cartan basis vectors must be even basis indices");
  }
}

Rational LieSuperalgebra::structure_constant(int i, int j, int k) const {
  for (const auto& t : bracket_terms(i, j))
    if (t.index == k) return t.coefficient;
  return Rational(0);
}

GVector LieSuperalgebra::bracket(const GVector& x, const GVector& y) const {
  GVector out(static_cast<std::size_t>(dim()), Rational(0));
  for (int i = 0; i < dim(); ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y[static_cast<std::size_t>(j)] == 0) continue;
      Rational c = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      for (const auto& t : bracket_terms(i, j)) out[static_cast<std::size_t>(t.index)] += c * t.coefficient;
    }
  }
  return out;
}

Rational LieSuperalgebra::form(const GVector& x, const GVector& y) const {
  Rational out(0);
  for (int i = 0; i < dim(); ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y[static_cast<std::size_t>(j)] == 0) continue;
      out += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)] * form(i, j);
    }
  }
  return out;
}

bool LieSuperalgebra::is_cartan(int i) const {
  return std::find(cartan_.begin(), cartan_.end(), i) != cartan_.end();
}

GVector LieSuperalgebra::basis_vector(int i) const {
  GVector v(static_cast<std::size_t>(dim()), Rational(0));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

Parity LieSuperalgebra::parity_of(const GVector& x) const {
  bool seen_even = false;
  bool seen_odd = false;
  for (int i = 0; i < dim(); ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    (parity(i) == Parity::even ? seen_even : seen_odd) = true;
  }
  if (seen_even && seen_odd) throw std::invalid_argument("vector is not homogeneous");
  return seen_odd ? Parity::odd : Parity::even;
}

std::string LieSuperalgebra::describe(const GVector& x) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < dim(); ++i) {
    const Rational& c = x[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational mag = abs(c);
    if (mag != 1) os << mag.get_str() << "*";
    os << label(i);
  }
  return first ? "0" : os.str();
}

}  // namespace sdyn
