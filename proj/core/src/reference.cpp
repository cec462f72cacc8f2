#include "hps/reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace hps {
namespace {

constexpr std::int64_t kStepCap = 10'000'000;

struct Linearization {
  Matrix a;   // m x d, rows ∇g_j(x)
  Vector b;   // g_j(x) - x'∇g_j(x)
  Vector asq; // row squared norms
};

Linearization linearize_constraints(const ProblemSpec& p, const Vector& x) {
  Linearization lin;
  lin.a.resize(p.m, p.d);
  lin.b.resize(p.m);
  lin.asq.resize(p.m);
  for (Index j = 0; j < p.m; ++j) {
    const Vector g = p.con_grad(j, x);
    lin.a.row(j) = g.transpose();
    lin.b[j] = p.con_val(j, x) - x.dot(g);
    lin.asq[j] = g.squaredNorm();
  }
  return lin;
}

double penalized_value(const ProblemSpec& p, const Vector& x, double weight) {
  double v = p.full_obj_with_h(x);
  for (Index j = 0; j < p.m; ++j) v += weight * std::max(0.0, p.con_val(j, x));
  return v;
}

// Inner subproblem at anchor z with per-constraint hinge weight c:
//   min_u h(u) + sum_j c [a_j'u + b_j]_+ + ||z-u||^2/(2 eta)
// solved in the dual over lambda in [0,c]^m; u(lambda) = prox_h(eta, z - eta A'lambda).
// For h == 0 each coordinate maximization is exact (one hinge-prox pass per
// constraint); otherwise each coordinate is maximized by golden section.
struct InnerSolver {
  const ProblemSpec& p;
  double eta;
  double cap;  // per-constraint weight gamma/m
  const Linearization& lin;
  Vector lambda;  // warm-started across outer iterations
  std::int64_t passes = 0;

  InnerSolver(const ProblemSpec& p_, double eta_, double cap_, const Linearization& lin_)
      : p(p_), eta(eta_), cap(cap_), lin(lin_), lambda(Vector::Zero(p_.m)) {}

  Vector primal(const Vector& z) const {
    const Vector s = z - eta * (lin.a.transpose() * lambda);
    return p.h_kind == RegularizerKind::zero ? s : p.prox_h(eta, s);
  }

  // Projected-gradient fixed-point residual of the dual.
  double residual(const Vector& z) const {
    const Vector u = primal(z);
    double r = 0.0;
    for (Index j = 0; j < p.m; ++j) {
      const double grad = lin.b[j] + lin.a.row(j).dot(u);
      const double curv = eta * lin.asq[j] + 1e-300;
      const double lam_new = std::clamp(lambda[j] + grad / curv, 0.0, cap);
      r = std::max(r, std::abs(lam_new - lambda[j]) * curv);
    }
    return r;
  }

  void solve(const Vector& z, double inner_tol, std::int64_t max_passes, std::int64_t& budget) {
    if (cap <= 0.0) {
      lambda.setZero();
      return;
    }
    if (p.h_kind == RegularizerKind::zero) {
      Vector s = z - eta * (lin.a.transpose() * lambda);
      for (std::int64_t pass = 0; pass < max_passes; ++pass) {
        ++passes;
        if (--budget <= 0) return;
        double shift = 0.0;
        for (Index j = 0; j < p.m; ++j) {
          if (lin.asq[j] <= 0.0) continue;
          const double grad = lin.b[j] + lin.a.row(j).dot(s);
          const double lam_new = std::clamp(lambda[j] + grad / (eta * lin.asq[j]), 0.0, cap);
          const double delta = lam_new - lambda[j];
          if (delta != 0.0) {
            s -= (eta * delta) * lin.a.row(j).transpose();
            lambda[j] = lam_new;
            shift = std::max(shift, std::abs(delta) * eta * lin.asq[j]);
          }
        }
        if (shift <= inner_tol) break;
      }
      return;
    }
    // Nonsmooth h: coordinate golden section on the dual.
    constexpr double invphi = 0.6180339887498949;
    auto dual_coord = [&](Index j, double lam_j) {
      Vector trial = lambda;
      trial[j] = lam_j;
      const Vector point = z - eta * (lin.a.transpose() * trial);
      const Vector u = p.prox_h(eta, point);
      double v = trial.dot(lin.b) + p.h_val(u) + (point - u).squaredNorm() / (2.0 * eta);
      v += trial.dot(lin.a * z) - 0.5 * eta * (lin.a.transpose() * trial).squaredNorm();
      return v;
    };
    for (std::int64_t pass = 0; pass < max_passes; ++pass) {
      ++passes;
      if (--budget <= 0) return;
      for (Index j = 0; j < p.m; ++j) {
        if (lin.asq[j] <= 0.0) continue;
        double lo = 0.0, hi = cap;
        double c = hi - invphi * hi, d = invphi * hi;
        double fc = dual_coord(j, c), fd = dual_coord(j, d);
        while (hi - lo > 1e-14 * (1.0 + cap)) {
          if (fc > fd) {
            hi = d; d = c; fd = fc;
            c = hi - invphi * (hi - lo);
            fc = dual_coord(j, c);
          } else {
            lo = c; c = d; fc = fd;
            d = lo + invphi * (hi - lo);
            fd = dual_coord(j, d);
          }
        }
        lambda[j] = 0.5 * (lo + hi);
      }
      if (residual(z) <= inner_tol) break;
    }
  }
};

}  // namespace

Vector solve_unconstrained(const ProblemSpec& problem, double tol) {
  Vector x = problem.slater_point;
  double eta = 1.0 / problem.l_f;
  double fx = problem.full_obj(x);
  std::int64_t steps = 0;
  while (steps++ < kStepCap) {
    const Vector grad = problem.full_obj_grad(x);
    Vector x_new;
    for (;;) {
      x_new = problem.prox_h(eta, x - eta * grad);
      const double f_new = problem.full_obj(x_new);
      const Vector diff = x_new - x;
      const double model = fx + grad.dot(diff) + diff.squaredNorm() / (2.0 * eta);
      if (f_new <= model + 1e-12 * (1.0 + std::abs(model)) || eta < 1e-18) break;
      eta *= 0.5;
    }
    const double step_norm = (x_new - x).norm();
    x = x_new;
    fx = problem.full_obj(x);
    if (step_norm <= tol * eta) break;
    eta = std::min(eta * 1.25, 100.0 / problem.mu);
  }
  return x;
}

ReferenceSolution solve_exact(const ProblemSpec& problem, double tol, SolveMode mode,
                              double gamma_override) {
  if (!(tol > 0.0)) throw ContractViolation("solve_exact: tol must be positive");
  problem.check_contract();

  double gamma;
  if (gamma_override >= 0.0) {
    gamma = gamma_override;
  } else {
    // Factor 4 (resp. 8) over the m B~/nu threshold for margin against B~
    // estimation error. A zero stored bound is bootstrapped from the
    // unconstrained minimum, which lower-bounds the constrained one.
    double gap = problem.slater_gap_bound;
    if (gap <= 0.0) {
      const Vector x_unc = solve_unconstrained(problem, std::min(tol, 1e-10));
      gap = std::max(0.0, problem.full_obj_with_h(problem.slater_point) -
                              problem.full_obj_with_h(x_unc));
    }
    const double factor = (mode == SolveMode::penalized) ? 4.0 : 8.0;
    gamma = factor * static_cast<double>(problem.m) * gap / problem.slater_margin;
  }
  const double cap = gamma / static_cast<double>(problem.m);

  Vector x = problem.slater_point;
  double eta = 1.0 / (problem.l_f + cap * problem.l_g * static_cast<double>(problem.m) + problem.mu);
  std::int64_t budget = kStepCap;
  Vector multipliers = Vector::Zero(problem.m);
  double kkt = std::numeric_limits<double>::infinity();

  Vector best_x = x;
  double best_kkt = kkt;

  std::int64_t outer = 0;
  bool converged = false;
  while (budget > 0) {
    ++outer;
    --budget;
    const Vector grad = problem.full_obj_grad(x);
    const double fx = problem.full_obj(x);
    const Linearization lin = linearize_constraints(problem, x);

    Vector x_new;
    InnerSolver inner(problem, eta, cap, lin);
    for (;;) {
      inner.eta = eta;
      inner.lambda = multipliers.cwiseMin(cap).cwiseMax(0.0);
      const Vector z = x - eta * grad;
      inner.solve(z, std::max(1e-15, tol * 1e-3) * (1.0 + cap), 400, budget);
      x_new = inner.primal(z);
      // Model decrease test; the linearized hinges under-estimate the true
      // ones only through the smoothness gap, so halve eta until the true
      // penalized value is covered.
      const Vector diff = x_new - x;
      double model = fx + grad.dot(diff) + diff.squaredNorm() / (2.0 * eta) + problem.h_val(x_new);
      for (Index j = 0; j < problem.m; ++j)
        model += cap * std::max(0.0, lin.b[j] + lin.a.row(j).dot(x_new));
      const double actual = penalized_value(problem, x_new, cap);
      if (actual <= model + 1e-10 * (1.0 + std::abs(model)) || eta < 1e-16 || budget <= 0) break;
      eta *= 0.5;
    }
    multipliers = inner.lambda;

    const double step_norm = (x_new - x).norm();
    x = x_new;
    kkt = kkt_residual(problem, x, multipliers);
    if (kkt < best_kkt) {
      best_kkt = kkt;
      best_x = x;
    }
    if (step_norm <= tol * eta && kkt <= 100.0 * tol) {
      converged = true;
      break;
    }
    eta = std::min(eta * 1.25, 100.0 / problem.mu);
  }

  if (!converged)
    throw ConvergenceFailure("solve_exact: iteration cap reached", best_x, best_kkt);

  ReferenceSolution sol;
  sol.x_star = x;
  sol.f_star = problem.full_obj_with_h(x);
  sol.kkt_residual = kkt;
  sol.max_violation = problem.max_violation(x);
  sol.multipliers = multipliers;
  sol.method = (mode == SolveMode::penalized) ? "prox-linear/penalized" : "prox-linear/feasibility";
  return sol;
}

std::pair<Vector, double> brute_force_prox(const HingeProxQuery& q, Index grid_points) {
  if (grid_points < 1000) throw ContractViolation("brute_force_prox: need >= 1000 grid points");
  const Vector a = q.a();
  const double b = q.b();
  const double eta = q.eta;
  const Vector& z = q.z;
  const Eigen::Index d = z.size();
  const double denom = static_cast<double>(grid_points - 1);
  const double asq = a.squaredNorm();
  const double a0 = a.dot(z) + b;

  double best_obj = std::numeric_limits<double>::infinity();
  double best_lambda = 0.0;
  const RegularizerKind kind = q.problem ? q.problem->h_kind : RegularizerKind::zero;

  if (kind == RegularizerKind::zero) {
    for (Index i = 0; i < grid_points; ++i) {
      const double lam = static_cast<double>(i) / denom;
      const double obj = std::max(0.0, a0 - eta * lam * asq) + 0.5 * eta * lam * lam * asq;
      if (obj < best_obj) {
        best_obj = obj;
        best_lambda = lam;
      }
    }
    return {z - (eta * best_lambda) * a, best_obj};
  }

  if (kind == RegularizerKind::l1 || kind == RegularizerKind::box) {
    const double w = q.problem->h_l1_weight;
    const double lo = q.problem->h_box_lo, hi = q.problem->h_box_hi;
    const double thr = eta * w;
    for (Index i = 0; i < grid_points; ++i) {
      const double lam = static_cast<double>(i) / denom;
      const double scale = eta * lam;
      double hinge_arg = b, sq = 0.0, hval = 0.0;
      for (Eigen::Index k = 0; k < d; ++k) {
        const double pk = z[k] - scale * a[k];
        double uk;
        if (kind == RegularizerKind::l1) {
          uk = (pk > thr) ? pk - thr : (pk < -thr ? pk + thr : 0.0);
          hval += std::abs(uk);
        } else {
          uk = std::min(std::max(pk, lo), hi);
        }
        hinge_arg += a[k] * uk;
        const double dk = z[k] - uk;
        sq += dk * dk;
      }
      const double obj =
          (kind == RegularizerKind::l1 ? w * hval : 0.0) + std::max(0.0, hinge_arg) + sq / (2.0 * eta);
      if (obj < best_obj) {
        best_obj = obj;
        best_lambda = lam;
      }
    }
    Vector x = q.problem->prox_h(eta, z - (eta * best_lambda) * a);
    return {std::move(x), best_obj};
  }

  for (Index i = 0; i < grid_points; ++i) {
    const double lam = static_cast<double>(i) / denom;
    const Vector u = q.problem->prox_h(eta, z - (eta * lam) * a);
    const double obj = hinge_prox_objective(q, u);
    if (obj < best_obj) {
      best_obj = obj;
      best_lambda = lam;
    }
  }
  Vector x = q.problem->prox_h(eta, z - (eta * best_lambda) * a);
  return {std::move(x), best_obj};
}

double kkt_residual(const ProblemSpec& problem, const Vector& x, const Vector& multipliers) {
  if (multipliers.size() != problem.m)
    throw ContractViolation("kkt_residual: multipliers must have length m");
  for (Index j = 0; j < problem.m; ++j)
    if (multipliers[j] < 0.0) throw ContractViolation("kkt_residual: negative multiplier");

  Vector station = problem.full_obj_grad(x);
  double comp = 0.0, feas = 0.0;
  for (Index j = 0; j < problem.m; ++j) {
    const double gj = problem.con_val(j, x);
    if (multipliers[j] != 0.0) station += multipliers[j] * problem.con_grad(j, x);
    comp += std::abs(multipliers[j] * gj);
    feas += std::max(0.0, gj);
  }

  switch (problem.h_kind) {
    case RegularizerKind::zero:
      break;
    case RegularizerKind::l1: {
      const double w = problem.h_l1_weight;
      for (Eigen::Index k = 0; k < x.size(); ++k) {
        if (x[k] > 0.0)
          station[k] += w;
        else if (x[k] < 0.0)
          station[k] -= w;
        else
          station[k] = (station[k] > w) ? station[k] - w : (station[k] < -w ? station[k] + w : 0.0);
      }
      break;
    }
    case RegularizerKind::box: {
      const double lo = problem.h_box_lo, hi = problem.h_box_hi;
      for (Eigen::Index k = 0; k < x.size(); ++k) {
        const double eps = 1e-10 * (1.0 + std::abs(x[k]));
        if (x[k] <= lo + eps) station[k] = std::min(station[k], 0.0);
        else if (x[k] >= hi - eps) station[k] = std::max(station[k], 0.0);
      }
      break;
    }
    case RegularizerKind::custom:
      station += problem.h_subgrad(x);
      break;
  }
  return station.norm() + comp + feas;
}

Vector solve_penalized_prox(const ProblemSpec& problem, Index j, const Vector& z, double eta,
                            double gamma, double tol) {
  if (j < 0 || j >= problem.m) throw ContractViolation("solve_penalized_prox: index out of range");
  if (!(eta > 0.0) || gamma < 0.0) throw ContractViolation("solve_penalized_prox: bad eta/gamma");

  // u(lam) = argmin ||z-u||^2/(2 eta) + lam g_j(u) + h(u), solved by
  // prox-gradient; g_j(u(lam)) is nonincreasing in lam, so the hinge
  // multiplier is found by bisection on its sign.
  auto minimize_at = [&](double lam, Vector u) {
    const double l_smooth = 1.0 / eta + lam * problem.l_g;
    const double step = 1.0 / l_smooth;
    for (int it = 0; it < 200000; ++it) {
      const Vector grad = (u - z) / eta + lam * problem.con_grad(j, u);
      Vector u_new = problem.prox_h(step, u - step * grad);
      const double delta = (u_new - u).norm();
      u = std::move(u_new);
      if (delta <= tol * step * (1.0 + u.norm())) break;
    }
    return u;
  };

  Vector u0 = minimize_at(0.0, problem.prox_h(eta, z));
  if (problem.con_val(j, u0) <= 0.0 || gamma == 0.0) return u0;
  Vector u_cap = minimize_at(gamma, u0);
  if (problem.con_val(j, u_cap) > 0.0) return u_cap;

  double lo = 0.0, hi = gamma;
  Vector u_mid = u_cap;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    u_mid = minimize_at(mid, u_mid);
    if (problem.con_val(j, u_mid) > 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-16 * gamma) break;
  }
  return minimize_at(hi, u_mid);
}

}  // namespace hps
