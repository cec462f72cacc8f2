#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hps/types.hpp"

namespace hps {

class EstimationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One SFO-indexed metric record.
struct TraceRecord {
  std::int64_t sfo = 0;
  Index iter = 0;
  double obj_gap = 0.0;     ///< |f(x_t)+h(x_t) - f*|
  double violation = 0.0;   ///< sum_j [g_j(x_t)]_+
  double dist_sq = 0.0;     ///< ||x_t - x*||^2
  std::int64_t wall_ns = 0;
};

enum class Metric { obj_gap, violation, dist_sq };

struct RunTrace {
  std::vector<TraceRecord> records;

  std::vector<double> metric_values(Metric m) const;
};

double metric_of(const TraceRecord& r, Metric m);

/// Trailing mean over up to `window` most recent points; output length equals
/// input length, the first elements average the available prefix.
std::vector<double> moving_average(const std::vector<double>& series, Index window);

struct SlopeFit {
  double slope = 0.0;
  double stderr_ = 0.0;
  Index points_used = 0;
  Index excluded = 0;  ///< non-positive metric values dropped from the fit
  double r_squared = 0.0;
};

/// Least-squares slope of log(metric) vs log(t) over t in [t_min, t_max].
/// Points with non-positive metric are excluded (counted in `excluded`);
/// fewer than 10 usable points raises EstimationError.
SlopeFit estimate_slope(const std::vector<std::pair<double, double>>& points, double t_min,
                        double t_max);

/// Convenience overload over a trace; t is the iteration index, or the SFO
/// count when by_sfo is set.
SlopeFit estimate_slope(const RunTrace& trace, Metric metric, double t_min, double t_max,
                        bool by_sfo = false);

}  // namespace hps
