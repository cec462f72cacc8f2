#pragma once

#include <cstdint>
#include <utility>

#include "hps/problem.hpp"
#include "hps/rng.hpp"
#include "hps/types.hpp"

namespace hps {

/// One bundled oracle answer: {∇f_i(x), g_j(x), ∇g_j(x)}.
struct SfoBundle {
  Vector obj_grad;
  double con_val = 0.0;
  Vector con_grad;
};

/// Metered access to a ProblemSpec. One unit per individual gradient
/// evaluation: a bundled call is 1 unit, an objective-only or
/// constraint-only call is 1 unit, a full objective gradient is n units.
/// Single-owner, single-threaded; distinct runs get distinct oracles.
class MeteredOracle {
 public:
  MeteredOracle(const ProblemSpec& problem, std::uint64_t seed);

  /// (i, j) drawn independently and uniformly; stream reproducible per seed.
  std::pair<Index, Index> sample_indices();

  /// Full bundle at x; counts 1 unit.
  SfoBundle sfo_call(const Vector& x, Index i, Index j);

  /// ∇f_i(x) alone; counts 1 unit.
  Vector obj_grad_call(const Vector& x, Index i);

  /// (g_j(x), ∇g_j(x)) alone; counts 1 unit.
  std::pair<double, Vector> con_call(const Vector& x, Index j);

  /// (1/n) sum_i ∇f_i(x); counts n units.
  Vector full_obj_grad_call(const Vector& x);

  std::int64_t sfo_count() const { return sfo_count_; }
  Xoshiro256ss& rng() { return rng_; }
  const ProblemSpec& problem() const { return *problem_; }

 private:
  void check_indices(Index i, Index j) const;

  const ProblemSpec* problem_;
  Xoshiro256ss rng_;
  std::int64_t sfo_count_ = 0;
};

}  // namespace hps
