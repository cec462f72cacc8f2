#pragma once

#include "hps/types.hpp"

namespace hps {

/// eta_t = (mu+L_f) / (mu L_f t + L~ (mu+L_f)), L~ = 2 max{gamma L_g, mu+L_f}.
/// Satisfies eta_t <= 1/L~ for all t >= 1.
double step_size_hps(Index t, double mu, double l_f, double gamma, double l_g);

/// Same shape with L' = 2 max{gamma L_g, 2(mu+L_f)}; eta_t <= 1/L'.
double step_size_vrhps(Index t, double mu, double l_f, double gamma, double l_g);

/// eta_t = 2(mu+L_f) / (mu L_f t + 8(mu+L_f)^2); satisfies eta_t <= 1/(4(mu+L_f)).
double step_size_nhps(Index t, double mu, double l_f);

/// Nonsmooth-f mode: eta_t = min{1/(2 gamma L_g), 1/(2 mu), 1/(mu t)}.
double step_size_hps_nonsmooth(Index t, double mu, double gamma, double l_g);

/// Exact-penalty weight 2 m B~ / nu; any value > m B~ / nu makes the hinge
/// penalty exact. Throws ContractViolation when nu <= 0.
double choose_penalty(Index m, double slater_gap_bound, double slater_margin);

}  // namespace hps
