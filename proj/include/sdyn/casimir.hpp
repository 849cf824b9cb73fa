#pragma once

#include "sdyn/root_datum.hpp"
#include "sdyn/tensor.hpp"

namespace sdyn {

/// Omega = sum_i x_i (x) x^i + sum_a A_a e_a (x) e_-a, with {x^i} the
/// form-dual Cartan basis. Supersymmetric (T_s Omega = Omega) and ad-invariant.
Tensor2 casimir(const LieSuperalgebra& g, const RootDatum& rd);

}  // namespace sdyn
