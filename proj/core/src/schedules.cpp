#include "hps/schedules.hpp"

#include <algorithm>

namespace hps {
namespace {

void check_constants(Index t, double mu, double l_f) {
  if (t < 1) throw ContractViolation("step size: t must be >= 1");
  if (!(mu > 0.0) || !(l_f > 0.0)) throw ContractViolation("step size: constants must be positive");
}

}  // namespace

double step_size_hps(Index t, double mu, double l_f, double gamma, double l_g) {
  check_constants(t, mu, l_f);
  const double l_tilde = 2.0 * std::max(gamma * l_g, mu + l_f);
  return (mu + l_f) / (mu * l_f * static_cast<double>(t) + l_tilde * (mu + l_f));
}

double step_size_vrhps(Index t, double mu, double l_f, double gamma, double l_g) {
  check_constants(t, mu, l_f);
  const double l_check = 2.0 * std::max(gamma * l_g, 2.0 * (mu + l_f));
  return (mu + l_f) / (mu * l_f * static_cast<double>(t) + l_check * (mu + l_f));
}

double step_size_nhps(Index t, double mu, double l_f) {
  check_constants(t, mu, l_f);
  const double s = mu + l_f;
  return 2.0 * s / (mu * l_f * static_cast<double>(t) + 8.0 * s * s);
}

double step_size_hps_nonsmooth(Index t, double mu, double gamma, double l_g) {
  if (t < 1) throw ContractViolation("step size: t must be >= 1");
  if (!(mu > 0.0)) throw ContractViolation("step size: mu must be positive");
  double eta = std::min(1.0 / (2.0 * mu), 1.0 / (mu * static_cast<double>(t)));
  const double gl = gamma * l_g;
  if (gl > 0.0) eta = std::min(eta, 1.0 / (2.0 * gl));
  return eta;
}

double choose_penalty(Index m, double slater_gap_bound, double slater_margin) {
  if (!(slater_margin > 0.0)) throw ContractViolation("choose_penalty: nu must be positive");
  if (m < 1) throw ContractViolation("choose_penalty: m must be >= 1");
  if (slater_gap_bound < 0.0) throw ContractViolation("choose_penalty: B~ must be nonnegative");
  return 2.0 * static_cast<double>(m) * slater_gap_bound / slater_margin;
}

}  // namespace hps
