#pragma once

#include <functional>

#include "hps/types.hpp"

namespace hps {

enum class RegularizerKind { zero, l1, box, custom };

/// Oracle bundle plus problem constants.
///
/// The component functions f_i (i < n), constraints g_j (j < m), and the
/// regularizer h are exposed through callables so instances built by the
/// generators stay immutable and cheap to share across concurrent runs.
struct ProblemSpec {
  Index d = 0;  ///< dimension
  Index n = 0;  ///< number of objective components
  Index m = 0;  ///< number of functional constraints

  std::function<Vector(Index, const Vector&)> obj_grad;  ///< ∇f_i(x)
  std::function<double(Index, const Vector&)> obj_val;   ///< f_i(x)
  std::function<double(Index, const Vector&)> con_val;   ///< g_j(x)
  std::function<Vector(Index, const Vector&)> con_grad;  ///< ∇g_j(x)

  /// prox_h(eta, z) = argmin_u h(u) + ||z-u||^2/(2 eta); identity when h == 0.
  std::function<Vector(double, const Vector&)> prox_h;
  std::function<double(const Vector&)> h_val;
  /// An arbitrary subgradient of h (kink convention: the inactive side).
  std::function<Vector(const Vector&)> h_subgrad;

  RegularizerKind h_kind = RegularizerKind::zero;
  double h_l1_weight = 0.0;
  double h_box_lo = 0.0;
  double h_box_hi = 0.0;

  double mu = 0.0;   ///< strong-convexity modulus of f, > 0
  double l_f = 0.0;  ///< smoothness of each f_i, >= mu
  double l_g = 0.0;  ///< smoothness of each g_j, >= 0

  Vector slater_point;             ///< strictly feasible point
  double slater_margin = 0.0;      ///< nu > 0: g_j(slater_point) <= -nu for all j
  double slater_gap_bound = 0.0;   ///< B~: f(x~)+h(x~) - f(x*)-h(x*) <= B~

  double full_obj(const Vector& x) const;          ///< (1/n) sum_i f_i(x)
  double full_obj_with_h(const Vector& x) const;   ///< full_obj + h
  Vector full_obj_grad(const Vector& x) const;     ///< (1/n) sum_i ∇f_i(x)
  double total_violation(const Vector& x) const;   ///< sum_j [g_j(x)]_+
  double max_violation(const Vector& x) const;     ///< max_j [g_j(x)]_+

  /// Throws ContractViolation on missing callables, degenerate sizes, bad
  /// constants, or a Slater point that fails g_j(x~) <= -nu by evaluation.
  void check_contract() const;
};

/// Fill the h fields of a spec: identity prox, zero value.
void attach_zero_regularizer(ProblemSpec& p);

/// h(x) = weight * ||x||_1; prox is soft-thresholding.
void attach_l1_regularizer(ProblemSpec& p, double weight);

/// h = indicator of the box [lo, hi]^d; prox is the clamp.
void attach_box_regularizer(ProblemSpec& p, double lo, double hi);

}  // namespace hps
