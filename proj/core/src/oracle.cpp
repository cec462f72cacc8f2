#include "hps/oracle.hpp"

namespace hps {

MeteredOracle::MeteredOracle(const ProblemSpec& problem, std::uint64_t seed)
    : problem_(&problem), rng_(seed) {
  if (problem.n < 1 || problem.m < 1)
    throw ContractViolation("MeteredOracle: problem must have n >= 1 and m >= 1");
}

std::pair<Index, Index> MeteredOracle::sample_indices() {
  const Index i = static_cast<Index>(rng_.uniform_below(static_cast<std::uint64_t>(problem_->n)));
  const Index j = static_cast<Index>(rng_.uniform_below(static_cast<std::uint64_t>(problem_->m)));
  return {i, j};
}

void MeteredOracle::check_indices(Index i, Index j) const {
  if (i < 0 || i >= problem_->n) throw ContractViolation("sfo_call: objective index out of range");
  if (j < 0 || j >= problem_->m) throw ContractViolation("sfo_call: constraint index out of range");
}

SfoBundle MeteredOracle::sfo_call(const Vector& x, Index i, Index j) {
  check_indices(i, j);
  SfoBundle b;
  b.obj_grad = problem_->obj_grad(i, x);
  b.con_val = problem_->con_val(j, x);
  b.con_grad = problem_->con_grad(j, x);
  ++sfo_count_;
  return b;
}

Vector MeteredOracle::obj_grad_call(const Vector& x, Index i) {
  check_indices(i, 0);
  ++sfo_count_;
  return problem_->obj_grad(i, x);
}

std::pair<double, Vector> MeteredOracle::con_call(const Vector& x, Index j) {
  check_indices(0, j);
  ++sfo_count_;
  return {problem_->con_val(j, x), problem_->con_grad(j, x)};
}

Vector MeteredOracle::full_obj_grad_call(const Vector& x) {
  sfo_count_ += problem_->n;
  return problem_->full_obj_grad(x);
}

}  // namespace hps
