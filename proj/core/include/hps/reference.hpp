#pragma once

#include <string>
#include <utility>

#include "hps/hinge_prox.hpp"
#include "hps/problem.hpp"
#include "hps/types.hpp"

namespace hps {

/// Certified high-accuracy solution of a problem instance.
struct ReferenceSolution {
  Vector x_star;
  double f_star = 0.0;  ///< f(x*) + h(x*)
  double kkt_residual = 0.0;
  double max_violation = 0.0;
  std::string method;
  Vector multipliers;  ///< recovered KKT multipliers, length m
};

enum class SolveMode {
  penalized,    ///< minimize the exact-penalty objective with gamma = 4 m B~ / nu
  feasibility,  ///< same machinery with doubled gamma, as a feasibility-enforced cross-check
};

/// Deterministic full-information solve: full-gradient steps on f, each
/// followed by cyclic hinge-prox passes over all m constraints linearized at
/// the current point, until the step and the KKT residual fall below tol and
/// 100*tol. Identical inputs give bitwise-identical outputs. Throws
/// ConvergenceFailure (carrying the best iterate) if the 1e7-step cap hits.
///
/// gamma_override >= 0 replaces the mode's default penalty weight.
ReferenceSolution solve_exact(const ProblemSpec& problem, double tol,
                              SolveMode mode = SolveMode::penalized,
                              double gamma_override = -1.0);

/// Minimize f + h ignoring all constraints (bootstrap lower bound for B~).
Vector solve_unconstrained(const ProblemSpec& problem, double tol);

/// Evaluate the prox primal objective on a uniform lambda grid (lambda_i =
/// i/(N-1), so doubling N-1 refines the grid exactly) and return the best
/// point with its objective. grid_points must be >= 1000.
std::pair<Vector, double> brute_force_prox(const HingeProxQuery& q, Index grid_points);

/// ||∇f(x) + ∇h(x) + sum_j mu_j ∇g_j(x)|| + sum_j |mu_j g_j(x)| + sum_j [g_j(x)]_+
/// with the minimal-norm subgradient treatment of h at kinks; zero iff KKT
/// holds exactly. Negative multipliers are a contract violation.
double kkt_residual(const ProblemSpec& problem, const Vector& x, const Vector& multipliers);

/// Exact solution of the one-constraint penalized prox subproblem
///   argmin_u ||z-u||^2/(2 eta) + h(u) + gamma [g_j(u)]_+
/// with the true (non-linearized) g_j, via bisection on the hinge multiplier.
Vector solve_penalized_prox(const ProblemSpec& problem, Index j, const Vector& z, double eta,
                            double gamma, double tol = 1e-13);

}  // namespace hps
