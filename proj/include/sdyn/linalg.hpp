#pragma once

#include "sdyn/polynomial.hpp"

#include <optional>
#include <vector>

namespace sdyn {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

RationalMatrix identity_matrix(std::size_t n);

/// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

Rational determinant(RationalMatrix m);

/// Solves  sum_k x_k * columns[k] = rhs  exactly. Returns nullopt when rhs is
/// outside the span; throws std::invalid_argument when the columns are
/// linearly dependent.
std::optional<RationalVector> solve_in_span(const std::vector<RationalVector>& columns,
                                            const RationalVector& rhs);

RationalVector multiply(const RationalMatrix& m, const RationalVector& v);

}  // namespace sdyn
