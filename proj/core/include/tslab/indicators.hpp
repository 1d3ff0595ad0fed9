#pragma once

#include <Eigen/Core>

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tslab/series.hpp"

namespace tslab::indicators {

/// Rolling-window entries that are not yet defined (the first window-1
/// positions, decomposition edges) are marked with quiet NaN.

struct BandsTriple {
  std::vector<double> middle;
  std::vector<double> upper;
  std::vector<double> lower;
  int window = 0;
  double k = 0.0;
};

struct Decomposition {
  std::vector<double> trend;
  std::vector<double> seasonal;
  std::vector<double> residual;
  int period = 0;
};

struct MacdTriple {
  std::vector<double> macd_line;
  std::vector<double> signal_line;
  std::vector<double> histogram;
  int fast = 0;
  int slow = 0;
  int signal = 0;
};

struct FourierComponents {
  /// |X_k| for the unique frequency bins k = 0..floor(n/2).
  std::vector<double> magnitudes;
  std::vector<int> counts;
  /// reconstructions[i] keeps the counts[i] largest-magnitude conjugate
  /// bin pairs and zeroes the rest.
  std::vector<std::vector<double>> reconstructions;
};

struct CorrelationMatrix {
  std::vector<std::string> labels;
  Eigen::MatrixXd values;
  std::vector<std::string> dropped;  // zero-variance columns removed up front
};

struct RollingStats {
  std::vector<double> mean;
  std::vector<double> stddev;
  int window = 0;
};

enum class ReturnMode { kSimple, kLog };

using NamedColumn = std::pair<std::string, std::vector<double>>;

/// Autocorrelation for lags 0..max_lag, biased (1/n) estimator around the
/// overall mean; acf[0] == 1. Requires max_lag < n.
std::vector<double> acf(const Series& series, int max_lag);

/// Partial autocorrelation via the Durbin-Levinson recursion on acf.
/// Entry 0 is 1 by convention and pacf[1] == acf[1]. Requires max_lag < n/2.
std::vector<double> pacf(const Series& series, int max_lag);

/// Middle = rolling mean, upper/lower = middle +- k * rolling population
/// std. First window-1 entries are NaN.
BandsTriple bollinger(const Series& series, int window = 20, double k = 2.0);

/// Simple: y_t / y_{t-1} - 1. Log: ln(y_t) - ln(y_{t-1}). Length n-1,
/// timestamps from the second observation onward.
Series daily_returns(const Series& series, ReturnMode mode);

/// Direct O(n^2) DFT of the series (mean retained, no padding) plus
/// truncated reconstructions for each requested component count.
FourierComponents fourier_components(const Series& series, std::span<const int> counts);

/// Pearson correlations between equal-length columns. Zero-variance
/// columns are dropped and reported; at least two must remain.
CorrelationMatrix correlation_matrix(const std::vector<NamedColumn>& columns);

/// EMA convergence/divergence: EMA(fast) - EMA(slow), signal = EMA of the
/// macd line, histogram = macd - signal. Each EMA is seeded with the first
/// observation and uses alpha = 2/(span+1). Requires n >= slow.
MacdTriple macd(const Series& series, int fast = 12, int slow = 26, int signal = 9);

/// Additive decomposition: centered moving-average trend (split end
/// weights for even periods), per-phase seasonal means re-centered to sum
/// zero, residual remainder. Requires n >= 2 * period.
Decomposition decompose(const Series& series, int period);

/// Trailing-window mean and population std; first window-1 entries NaN.
RollingStats rolling_stats(const Series& series, int window);

}  // namespace tslab::indicators
