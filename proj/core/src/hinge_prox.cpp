#include "hps/hinge_prox.hpp"

#include <cmath>
#include <string>

namespace hps {
namespace {

Vector apply_prox(const HingeProxQuery& q, const Vector& point) {
  if (q.problem && q.problem->prox_h) return q.problem->prox_h(q.eta, point);
  return point;
}

double h_value(const HingeProxQuery& q, const Vector& u) {
  if (q.problem && q.problem->h_val) return q.problem->h_val(u);
  return 0.0;
}

bool degenerate_hinge(const HingeProxQuery& q, double wsq) {
  const double asq = q.gamma * q.gamma * wsq;
  return asq <= 1e-14 * (1.0 + q.z.squaredNorm());
}

void check_query(const HingeProxQuery& q) {
  if (!(q.eta > 0.0)) throw ContractViolation("hinge prox: eta must be positive");
  if (q.gamma < 0.0) throw ContractViolation("hinge prox: gamma must be nonnegative");
  if (!all_finite(q.z) || !all_finite(q.con_grad))
    throw ContractViolation("hinge prox: non-finite query");
}

void audit_slackness(const HingeProxQuery& q, HingeProxResult& r) {
  // eps scales with |b| so affine offsets of any magnitude audit cleanly.
  const double eps = 1e-8 * (1.0 + std::abs(q.b()));
  const double active = q.gamma * q.lin_value(r.x);  // a'x + b
  if (active < -eps && r.lambda > eps) r.slackness_ok = false;
  if (r.lambda < 1.0 - eps && active > eps) r.slackness_ok = false;
}

}  // namespace

HingeProxQuery HingeProxQuery::from_affine(Vector z, Vector a, double b, double eta,
                                           const ProblemSpec* problem) {
  HingeProxQuery q;
  q.lin_point = Vector::Zero(z.size());
  q.con_grad = std::move(a);
  q.con_val = b;
  q.gamma = 1.0;
  q.eta = eta;
  q.z = std::move(z);
  q.problem = problem;
  return q;
}

HingeProxResult hinge_prox_closed_form(const HingeProxQuery& q) {
  check_query(q);
  if (q.has_regularizer())
    throw ContractViolation("hinge_prox_closed_form: query carries a nonzero regularizer");

  HingeProxResult r;
  const double wsq = q.con_grad.squaredNorm();
  if (degenerate_hinge(q, wsq)) {
    r.x = q.z;
    r.lambda = 0.0;
    return r;
  }

  // lambda* = (b + a'z) / (eta a'a) with the gamma scaling cancelled, so the
  // unsaturated update reduces exactly to z - (lin/||w||^2) w.
  const double lin = q.lin_value(q.z);
  const double lam = lin / ((q.eta * q.gamma) * wsq);
  if (lam <= 0.0) {
    r.x = q.z;
    r.lambda = 0.0;
  } else if (lam >= 1.0) {
    r.lambda = 1.0;
    r.x = q.z - (q.eta * q.gamma) * q.con_grad;
  } else {
    r.lambda = lam;
    const double coeff = lin / wsq;
    r.x = q.z - coeff * q.con_grad;
  }
  audit_slackness(q, r);
  return r;
}

double hinge_prox_dual_value(const HingeProxQuery& q, double lambda) {
  const Vector a = q.a();
  const Vector point = q.z - (q.eta * lambda) * a;
  const Vector u = apply_prox(q, point);
  const double inner = h_value(q, u) + (point - u).squaredNorm() / (2.0 * q.eta);
  const double rho = q.b() * lambda + inner - 0.5 * q.eta * lambda * lambda * a.squaredNorm() +
                     lambda * a.dot(q.z);
  if (!std::isfinite(rho))
    throw EvaluationError("hinge prox dual is non-finite at lambda = " + std::to_string(lambda));
  return rho;
}

HingeProxResult hinge_prox_general(const HingeProxQuery& q, double tol) {
  check_query(q);
  if (!(tol > 0.0)) throw ContractViolation("hinge_prox_general: tol must be positive");

  HingeProxResult r;
  const double wsq = q.con_grad.squaredNorm();
  if (degenerate_hinge(q, wsq)) {
    r.x = apply_prox(q, q.z);
    r.lambda = 0.0;
    audit_slackness(q, r);
    return r;
  }

  // Golden-section on the concave dual; chosen over bisection since rho need
  // not be differentiable when h is nonsmooth.
  constexpr double invphi = 0.6180339887498949;
  double lo = 0.0, hi = 1.0;
  double c = hi - invphi * (hi - lo);
  double d = lo + invphi * (hi - lo);
  double fc = hinge_prox_dual_value(q, c);
  double fd = hinge_prox_dual_value(q, d);
  int iters = 2;
  while (hi - lo > tol) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = hinge_prox_dual_value(q, c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = hinge_prox_dual_value(q, d);
    }
    ++iters;
  }
  r.lambda = 0.5 * (lo + hi);
  r.dual_iters = iters;
  r.x = apply_prox(q, q.z - (q.eta * r.lambda) * q.a());
  audit_slackness(q, r);
  return r;
}

double hinge_prox_objective(const HingeProxQuery& q, const Vector& u) {
  const double hinge = std::max(0.0, q.gamma * q.lin_value(u));
  return h_value(q, u) + hinge + (q.z - u).squaredNorm() / (2.0 * q.eta);
}

HingeProxQuery make_query(const Vector& x_t, const Vector& z_t, Index j, double gamma, double eta,
                          const ProblemSpec& problem) {
  if (j < 0 || j >= problem.m) throw ContractViolation("make_query: constraint index out of range");
  return make_query_from_bundle(x_t, z_t, problem.con_val(j, x_t), problem.con_grad(j, x_t), gamma,
                                eta, problem);
}

HingeProxQuery make_query_from_bundle(const Vector& x_t, const Vector& z_t, double con_val,
                                      Vector con_grad, double gamma, double eta,
                                      const ProblemSpec& problem) {
  if (gamma < 0.0) throw ContractViolation("make_query: gamma must be nonnegative");
  if (!(eta > 0.0)) throw ContractViolation("make_query: eta must be positive");
  HingeProxQuery q;
  q.z = z_t;
  q.lin_point = x_t;
  q.con_grad = std::move(con_grad);
  q.con_val = con_val;
  q.gamma = gamma;
  q.eta = eta;
  q.problem = &problem;
  return q;
}

}  // namespace hps
