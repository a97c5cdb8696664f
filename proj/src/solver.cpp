#include "mpinv/solver.hpp"

#include "mpinv/gram_form.hpp"

namespace mpinv {

bool is_consistent(const BlockOperator& op, const SparseVector& w) {
  return apply(compose(op, mp_inverse(op)), w) == w;
}

SparseVector min_least_norm_solution(const BlockOperator& op, const SparseVector& w) {
  return apply(mp_inverse(op), w);
}

Rational residual_norm_squared(const BlockOperator& op, const SparseVector& x,
                               const SparseVector& w) {
  return norm_squared(apply(op, x) - w);
}

SolveReport solve(const BlockOperator& op, const SparseVector& w) {
  const BlockOperator pinv = mp_inverse(op);
  SolveReport rep;
  rep.min_solution = apply(pinv, w);
  rep.consistent = apply(op, rep.min_solution) == w;
  rep.residual_norm_sq = residual_norm_squared(op, rep.min_solution, w);
  rep.kernel = kernel_description(op);
  return rep;
}

}  // namespace mpinv
