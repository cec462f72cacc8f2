#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace hps {

// Dense double-precision vector; all public operations keep entries finite.
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = std::int64_t;

inline bool all_finite(const Vector& v) { return v.allFinite(); }

// Caller broke a documented precondition.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A solver iterate left the finite/bounded region.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& msg, Index iteration)
      : std::runtime_error(msg + " (iteration " + std::to_string(iteration) + ")"),
        iteration_(iteration) {}
  Index iteration() const { return iteration_; }

 private:
  Index iteration_;
};

// A function evaluation produced a non-finite value.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data could not be ingested; carries the offending column.
class IngestError : public std::runtime_error {
 public:
  IngestError(const std::string& msg, std::string column)
      : std::runtime_error(msg + " (column '" + column + "')"), column_(std::move(column)) {}
  const std::string& column() const { return column_; }

 private:
  std::string column_;
};

// An iterative reference solve hit its cap; carries the best iterate found.
class ConvergenceFailure : public std::runtime_error {
 public:
  ConvergenceFailure(const std::string& msg, Vector best, double residual)
      : std::runtime_error(msg + " (residual " + std::to_string(residual) + ")"),
        best_iterate_(std::move(best)),
        residual_(residual) {}
  const Vector& best_iterate() const { return best_iterate_; }
  double residual() const { return residual_; }

 private:
  Vector best_iterate_;
  double residual_;
};

}  // namespace hps
