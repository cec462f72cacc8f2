#pragma once

#include "hps/problem.hpp"
#include "hps/types.hpp"

namespace hps {

/// One hinge-proximal evaluation:
///   argmin_u  h(u) + [a'u + b]_+ + ||z - u||^2 / (2 eta)
/// with a = gamma * ∇g_j(x_t) and b = gamma * (g_j(x_t) - x_t' ∇g_j(x_t)).
///
/// The query stores the unscaled linearization (con_grad, con_val, lin_point)
/// together with gamma so the closed-form solver can cancel the scaling
/// exactly; a() and b() expose the scaled coefficients.
struct HingeProxQuery {
  Vector z;          ///< anchor point
  Vector lin_point;  ///< x_t, where the constraint was linearized
  Vector con_grad;   ///< ∇g_j(x_t), unscaled
  double con_val = 0.0;  ///< g_j(x_t)
  double gamma = 0.0;    ///< penalty scale, >= 0
  double eta = 0.0;      ///< proximal weight, > 0
  /// Regularizer carrier; nullptr or h_kind == zero means h == 0.
  const ProblemSpec* problem = nullptr;

  Vector a() const { return gamma * con_grad; }
  double b() const { return gamma * (con_val - lin_point.dot(con_grad)); }

  /// Linearized constraint value at u, scaled by 1/gamma:
  /// g~_j(u, x_t) = g_j(x_t) + <∇g_j(x_t), u - x_t>.
  double lin_value(const Vector& u) const { return con_val + con_grad.dot(u - lin_point); }

  bool has_regularizer() const {
    return problem != nullptr && problem->h_kind != RegularizerKind::zero;
  }

  /// Build a query directly from affine hinge data (a'u + b with unit gamma).
  static HingeProxQuery from_affine(Vector z, Vector a, double b, double eta,
                                    const ProblemSpec* problem = nullptr);
};

struct HingeProxResult {
  Vector x;            ///< minimizer
  double lambda = 0.0; ///< dual multiplier in [0,1]
  int dual_iters = 0;  ///< 1-D search iterations (0 for closed form)
  /// Complementary slackness audit with eps = 1e-8*(1+|b|): false when the
  /// hinge is strictly inactive at x but lambda is interior, or vice versa.
  bool slackness_ok = true;
};

/// Closed form for h == 0:
///   lambda* = clip((b + a'z) / (eta a'a), 0, 1),  x = z - eta lambda* a.
/// Degenerate ||a||^2 <= 1e-14 (1+||z||^2): the hinge is constant in u,
/// returns x = z with lambda = 0. Throws ContractViolation if eta <= 0 or the
/// query carries a nonzero regularizer.
HingeProxResult hinge_prox_closed_form(const HingeProxQuery& q);

/// Concave dual value at lambda in [0,1]:
///   rho(lambda) = b lambda + min_u [h(u) + ||z - eta lambda a - u||^2/(2 eta)]
///                 - eta lambda^2 a'a / 2 + lambda a'z.
/// Exposed for property tests (concavity probes).
double hinge_prox_dual_value(const HingeProxQuery& q, double lambda);

/// General case: golden-section maximization of the dual over [0,1] down to
/// bracket width <= tol, then x = prox_h(eta, z - eta lambda a). Falls back to
/// the closed form when the query has no regularizer. EvaluationError if the
/// dual is non-finite at a probe.
HingeProxResult hinge_prox_general(const HingeProxQuery& q, double tol = 1e-12);

/// Primal objective h(u) + [a'u + b]_+ + ||z - u||^2/(2 eta) (for oracles).
double hinge_prox_objective(const HingeProxQuery& q, const Vector& u);

/// Assemble the query for constraint j of `problem`, linearized at x_t with
/// anchor z_t. Evaluates the constraint half of one SFO bundle.
HingeProxQuery make_query(const Vector& x_t, const Vector& z_t, Index j, double gamma, double eta,
                          const ProblemSpec& problem);

/// Same, from an already-evaluated constraint value/gradient pair (so a
/// solver can reuse the bundle it was metered for).
HingeProxQuery make_query_from_bundle(const Vector& x_t, const Vector& z_t, double con_val,
                                      Vector con_grad, double gamma, double eta,
                                      const ProblemSpec& problem);

}  // namespace hps
