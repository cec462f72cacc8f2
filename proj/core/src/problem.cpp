#include "hps/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hps {

double ProblemSpec::full_obj(const Vector& x) const {
  double s = 0.0;
  for (Index i = 0; i < n; ++i) s += obj_val(i, x);
  return s / static_cast<double>(n);
}

double ProblemSpec::full_obj_with_h(const Vector& x) const { return full_obj(x) + h_val(x); }

Vector ProblemSpec::full_obj_grad(const Vector& x) const {
  Vector g = Vector::Zero(d);
  for (Index i = 0; i < n; ++i) g += obj_grad(i, x);
  return g / static_cast<double>(n);
}

double ProblemSpec::total_violation(const Vector& x) const {
  double s = 0.0;
  for (Index j = 0; j < m; ++j) s += std::max(0.0, con_val(j, x));
  return s;
}

double ProblemSpec::max_violation(const Vector& x) const {
  double v = 0.0;
  for (Index j = 0; j < m; ++j) v = std::max(v, con_val(j, x));
  return std::max(0.0, v);
}

void ProblemSpec::check_contract() const {
  if (d < 1) throw ContractViolation("ProblemSpec: d must be >= 1");
  if (n < 1) throw ContractViolation("ProblemSpec: n must be >= 1 (n=0 rejected)");
  if (m < 1)
    throw ContractViolation(
        "ProblemSpec: m must be >= 1; represent an unconstrained problem by m=1 with g == -1");
  if (!obj_grad || !obj_val || !con_val || !con_grad || !prox_h || !h_val || !h_subgrad)
    throw ContractViolation("ProblemSpec: all oracle callables must be set");
  if (!(mu > 0.0)) throw ContractViolation("ProblemSpec: mu must be positive");
  if (l_f < mu) throw ContractViolation("ProblemSpec: l_f must be >= mu");
  if (l_g < 0.0) throw ContractViolation("ProblemSpec: l_g must be nonnegative");
  if (slater_point.size() != d) throw ContractViolation("ProblemSpec: slater_point has wrong size");
  if (!(slater_margin > 0.0)) throw ContractViolation("ProblemSpec: slater_margin must be positive");
  if (slater_gap_bound < 0.0)
    throw ContractViolation("ProblemSpec: slater_gap_bound must be nonnegative");
  for (Index j = 0; j < m; ++j) {
    const double gj = con_val(j, slater_point);
    if (!(gj <= -slater_margin + 1e-12 * (1.0 + std::abs(gj))))
      throw ContractViolation("ProblemSpec: Slater check failed at constraint " + std::to_string(j));
  }
}

void attach_zero_regularizer(ProblemSpec& p) {
  p.h_kind = RegularizerKind::zero;
  p.prox_h = [](double, const Vector& z) { return z; };
  p.h_val = [](const Vector&) { return 0.0; };
  p.h_subgrad = [](const Vector& x) { return Vector::Zero(x.size()); };
}

void attach_l1_regularizer(ProblemSpec& p, double weight) {
  if (weight < 0.0) throw ContractViolation("l1 regularizer: weight must be nonnegative");
  p.h_kind = RegularizerKind::l1;
  p.h_l1_weight = weight;
  p.prox_h = [weight](double eta, const Vector& z) {
    const double thr = eta * weight;
    Vector out(z.size());
    for (Eigen::Index k = 0; k < z.size(); ++k) {
      const double v = z[k];
      out[k] = (v > thr) ? v - thr : (v < -thr ? v + thr : 0.0);
    }
    return out;
  };
  p.h_val = [weight](const Vector& x) { return weight * x.lpNorm<1>(); };
  p.h_subgrad = [weight](const Vector& x) {
    Vector g(x.size());
    for (Eigen::Index k = 0; k < x.size(); ++k)
      g[k] = (x[k] > 0.0) ? weight : (x[k] < 0.0 ? -weight : 0.0);
    return g;
  };
}

void attach_box_regularizer(ProblemSpec& p, double lo, double hi) {
  if (!(lo < hi)) throw ContractViolation("box regularizer: lo must be < hi");
  p.h_kind = RegularizerKind::box;
  p.h_box_lo = lo;
  p.h_box_hi = hi;
  p.prox_h = [lo, hi](double, const Vector& z) {
    return z.cwiseMax(lo).cwiseMin(hi).eval();
  };
  p.h_val = [lo, hi](const Vector& x) {
    for (Eigen::Index k = 0; k < x.size(); ++k)
      if (x[k] < lo || x[k] > hi) return std::numeric_limits<double>::infinity();
    return 0.0;
  };
  // Zero is a valid subgradient at interior points; the generators only
  // evaluate this at strictly feasible iterates.
  p.h_subgrad = [](const Vector& x) { return Vector::Zero(x.size()); };
}

}  // namespace hps
