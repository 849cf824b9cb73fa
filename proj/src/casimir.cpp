#include "sdyn/casimir.hpp"

#include "sdyn/algebra_checks.hpp"

namespace sdyn {

Tensor2 casimir(const LieSuperalgebra& g, const RootDatum& rd) {
  return tensor_from_matrix(casimir_matrix(g, rd));
}

}  // namespace sdyn
