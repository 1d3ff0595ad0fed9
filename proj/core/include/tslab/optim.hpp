#pragma once

#include <Eigen/Core>

#include <functional>

namespace tslab {

struct NelderMeadOptions {
  int max_iterations = 0;     // 0 -> 200 * dimension
  double tolerance = 1e-9;    // stop when the simplex value spread falls below
  double initial_step = 0.1;  // per-coordinate offset building the start simplex
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Derivative-free simplex minimization (reflection/expansion/contraction/
/// shrink with the standard 1, 2, 0.5, 0.5 coefficients). The objective may
/// return non-finite values; they are treated as +infinity.
NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& objective,
                             const Eigen::VectorXd& start,
                             const NelderMeadOptions& options = {});

}  // namespace tslab
