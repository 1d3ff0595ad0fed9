#include "tslab/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tslab::indicators {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double mean_of(std::span<const double> xs) {
  double m = 0.0;
  for (double x : xs) m += x;
  return m / static_cast<double>(xs.size());
}

}  // namespace

std::vector<double> acf(const Series& series, int max_lag) {
  const std::size_t n = series.size();
  if (max_lag < 0 || static_cast<std::size_t>(max_lag) >= n) {
    throw std::invalid_argument("acf: max_lag must satisfy 0 <= max_lag < n");
  }
  const std::vector<double>& v = series.values();
  const double mu = mean_of(v);
  double denom = 0.0;
  for (double x : v) denom += (x - mu) * (x - mu);
  if (!(denom > 0.0)) {
    throw std::domain_error("acf: series has zero variance");
  }
  std::vector<double> out(static_cast<std::size_t>(max_lag) + 1, 0.0);
  for (int k = 0; k <= max_lag; ++k) {
    double num = 0.0;
    for (std::size_t t = static_cast<std::size_t>(k); t < n; ++t) {
      num += (v[t] - mu) * (v[t - static_cast<std::size_t>(k)] - mu);
    }
    out[static_cast<std::size_t>(k)] = num / denom;
  }
  return out;
}

std::vector<double> pacf(const Series& series, int max_lag) {
  const std::size_t n = series.size();
  if (max_lag < 1 || static_cast<std::size_t>(2 * max_lag) >= n) {
    throw std::invalid_argument("pacf: max_lag must satisfy 1 <= max_lag < n/2");
  }
  const std::vector<double> r = acf(series, max_lag);

  std::vector<double> out(static_cast<std::size_t>(max_lag) + 1, 0.0);
  out[0] = 1.0;

  // Durbin-Levinson: phi[k][k] is the lag-k partial autocorrelation.
  std::vector<double> phi_prev(static_cast<std::size_t>(max_lag) + 1, 0.0);
  std::vector<double> phi_cur(static_cast<std::size_t>(max_lag) + 1, 0.0);
  phi_prev[1] = r[1];
  out[1] = r[1];
  for (int k = 2; k <= max_lag; ++k) {
    double num = r[static_cast<std::size_t>(k)];
    double den = 1.0;
    for (int j = 1; j < k; ++j) {
      num -= phi_prev[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)];
      den -= phi_prev[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(j)];
    }
    if (std::abs(den) < 1e-14) {
      throw std::domain_error("pacf: singular Durbin-Levinson recursion");
    }
    const double pk = num / den;
    for (int j = 1; j < k; ++j) {
      phi_cur[static_cast<std::size_t>(j)] =
          phi_prev[static_cast<std::size_t>(j)] -
          pk * phi_prev[static_cast<std::size_t>(k - j)];
    }
    phi_cur[static_cast<std::size_t>(k)] = pk;
    out[static_cast<std::size_t>(k)] = pk;
    std::swap(phi_prev, phi_cur);
  }
  return out;
}

BandsTriple bollinger(const Series& series, int window, double k) {
  const std::size_t n = series.size();
  if (window < 1 || static_cast<std::size_t>(window) > n) {
    throw std::invalid_argument("bollinger: window must satisfy 1 <= window <= n");
  }
  const RollingStats rs = rolling_stats(series, window);
  BandsTriple out;
  out.window = window;
  out.k = k;
  out.middle = rs.mean;
  out.upper.resize(n, kNaN);
  out.lower.resize(n, kNaN);
  for (std::size_t i = static_cast<std::size_t>(window) - 1; i < n; ++i) {
    out.upper[i] = rs.mean[i] + k * rs.stddev[i];
    out.lower[i] = rs.mean[i] - k * rs.stddev[i];
  }
  return out;
}

Series daily_returns(const Series& series, ReturnMode mode) {
  const std::size_t n = series.size();
  if (n < 2) {
    throw std::invalid_argument("daily_returns: need at least two observations");
  }
  const std::vector<double>& v = series.values();
  std::vector<double> out(n - 1);
  for (std::size_t t = 1; t < n; ++t) {
    if (mode == ReturnMode::kSimple) {
      if (v[t - 1] == 0.0) {
        throw std::domain_error("daily_returns: zero price in simple mode");
      }
      out[t - 1] = v[t] / v[t - 1] - 1.0;
    } else {
      if (!(v[t] > 0.0 && v[t - 1] > 0.0)) {
        throw std::domain_error("daily_returns: nonpositive price in log mode");
      }
      out[t - 1] = std::log(v[t]) - std::log(v[t - 1]);
    }
  }
  std::vector<Date> dates(series.timestamps().begin() + 1, series.timestamps().end());
  return Series(std::move(dates), std::move(out),
                mode == ReturnMode::kSimple ? "returns" : "log_returns");
}

FourierComponents fourier_components(const Series& series, std::span<const int> counts) {
  const std::size_t n = series.size();
  if (n < 2) {
    throw std::invalid_argument("fourier_components: need at least two observations");
  }
  const std::size_t n_bins = n / 2 + 1;  // unique bins under conjugate symmetry
  for (int c : counts) {
    if (c < 0 || static_cast<std::size_t>(c) > n_bins) {
      throw std::invalid_argument("fourier_components: component count exceeds spectrum");
    }
  }

  const std::vector<double>& v = series.values();
  std::vector<std::complex<double>> spectrum(n);
  const double two_pi = 2.0 * std::acos(-1.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t t = 0; t < n; ++t) {
      const double ang = -two_pi * static_cast<double>(k) * static_cast<double>(t) /
                         static_cast<double>(n);
      acc += v[t] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    spectrum[k] = acc;
  }

  FourierComponents out;
  out.magnitudes.resize(n_bins);
  for (std::size_t k = 0; k < n_bins; ++k) {
    out.magnitudes[k] = std::abs(spectrum[k]);
  }

  // Unique bins ranked by magnitude, ties broken toward lower frequencies.
  std::vector<std::size_t> order(n_bins);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return out.magnitudes[a] > out.magnitudes[b];
  });

  for (int c : counts) {
    std::vector<char> keep(n, 0);
    for (int i = 0; i < c; ++i) {
      const std::size_t k = order[static_cast<std::size_t>(i)];
      keep[k] = 1;
      if (k > 0 && k < n) keep[(n - k) % n] = 1;  // conjugate partner
    }
    std::vector<double> recon(n, 0.0);
    for (std::size_t t = 0; t < n; ++t) {
      std::complex<double> acc(0.0, 0.0);
      for (std::size_t k = 0; k < n; ++k) {
        if (!keep[k]) continue;
        const double ang = two_pi * static_cast<double>(k) * static_cast<double>(t) /
                           static_cast<double>(n);
        acc += spectrum[k] * std::complex<double>(std::cos(ang), std::sin(ang));
      }
      recon[t] = acc.real() / static_cast<double>(n);
    }
    out.counts.push_back(c);
    out.reconstructions.push_back(std::move(recon));
  }
  return out;
}

CorrelationMatrix correlation_matrix(const std::vector<NamedColumn>& columns) {
  CorrelationMatrix out;
  std::vector<const NamedColumn*> kept;
  std::size_t len = 0;
  for (const NamedColumn& col : columns) {
    if (kept.empty() && out.dropped.empty()) {
      len = col.second.size();
    } else if (col.second.size() != len) {
      throw std::invalid_argument("correlation_matrix: column length mismatch");
    }
    if (col.second.empty()) {
      throw std::invalid_argument("correlation_matrix: empty column");
    }
    const double mu = mean_of(col.second);
    double var = 0.0;
    for (double x : col.second) var += (x - mu) * (x - mu);
    if (var > 0.0) {
      kept.push_back(&col);
    } else {
      out.dropped.push_back(col.first);
    }
  }
  if (kept.size() < 2) {
    throw std::invalid_argument("correlation_matrix: need at least two non-constant columns");
  }

  const std::size_t m = kept.size();
  std::vector<std::vector<double>> centered(m);
  std::vector<double> norms(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.labels.push_back(kept[i]->first);
    const std::vector<double>& c = kept[i]->second;
    const double mu = mean_of(c);
    centered[i].resize(len);
    double ss = 0.0;
    for (std::size_t t = 0; t < len; ++t) {
      centered[i][t] = c[t] - mu;
      ss += centered[i][t] * centered[i][t];
    }
    norms[i] = std::sqrt(ss);
  }

  out.values.resize(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i) {
    out.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
    for (std::size_t j = i + 1; j < m; ++j) {
      double dot = 0.0;
      for (std::size_t t = 0; t < len; ++t) dot += centered[i][t] * centered[j][t];
      const double r = dot / (norms[i] * norms[j]);
      out.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = r;
      out.values(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = r;
    }
  }
  return out;
}

namespace {

std::vector<double> ema(std::span<const double> v, int span) {
  const double alpha = 2.0 / (static_cast<double>(span) + 1.0);
  std::vector<double> out(v.size());
  out[0] = v[0];
  for (std::size_t t = 1; t < v.size(); ++t) {
    out[t] = alpha * v[t] + (1.0 - alpha) * out[t - 1];
  }
  return out;
}

}  // namespace

MacdTriple macd(const Series& series, int fast, int slow, int signal) {
  const std::size_t n = series.size();
  if (fast < 1 || slow < 1 || signal < 1) {
    throw std::invalid_argument("macd: spans must be positive");
  }
  if (n < static_cast<std::size_t>(slow)) {
    throw std::invalid_argument("macd: series shorter than the slow span");
  }
  const std::vector<double> ema_fast = ema(series.view(), fast);
  const std::vector<double> ema_slow = ema(series.view(), slow);

  MacdTriple out;
  out.fast = fast;
  out.slow = slow;
  out.signal = signal;
  out.macd_line.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    out.macd_line[t] = ema_fast[t] - ema_slow[t];
  }
  out.signal_line = ema(out.macd_line, signal);
  out.histogram.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    out.histogram[t] = out.macd_line[t] - out.signal_line[t];
  }
  return out;
}

Decomposition decompose(const Series& series, int period) {
  const std::size_t n = series.size();
  if (period < 1) {
    throw std::invalid_argument("decompose: period must be positive");
  }
  if (n < 2 * static_cast<std::size_t>(period)) {
    throw std::invalid_argument("decompose: need at least two full periods");
  }
  const std::vector<double>& v = series.values();
  const std::size_t p = static_cast<std::size_t>(period);

  Decomposition out;
  out.period = period;
  out.trend.assign(n, kNaN);
  out.seasonal.assign(n, kNaN);
  out.residual.assign(n, kNaN);

  // Centered moving average; even periods get half weight at both ends.
  const std::size_t half = p / 2;
  if (p % 2 == 1) {
    for (std::size_t t = half; t + half < n; ++t) {
      double s = 0.0;
      for (std::size_t j = t - half; j <= t + half; ++j) s += v[j];
      out.trend[t] = s / static_cast<double>(p);
    }
  } else {
    for (std::size_t t = half; t + half < n; ++t) {
      double s = 0.5 * v[t - half] + 0.5 * v[t + half];
      for (std::size_t j = t - half + 1; j < t + half; ++j) s += v[j];
      out.trend[t] = s / static_cast<double>(p);
    }
  }

  // Per-phase means of the detrended series.
  std::vector<double> phase_sum(p, 0.0);
  std::vector<std::size_t> phase_count(p, 0);
  for (std::size_t t = 0; t < n; ++t) {
    if (std::isnan(out.trend[t])) continue;
    phase_sum[t % p] += v[t] - out.trend[t];
    ++phase_count[t % p];
  }
  std::vector<double> phase_mean(p, 0.0);
  double grand = 0.0;
  for (std::size_t j = 0; j < p; ++j) {
    if (phase_count[j] == 0) {
      throw std::domain_error("decompose: a seasonal phase has no defined trend points");
    }
    phase_mean[j] = phase_sum[j] / static_cast<double>(phase_count[j]);
    grand += phase_mean[j];
  }
  grand /= static_cast<double>(p);
  for (std::size_t j = 0; j < p; ++j) phase_mean[j] -= grand;  // centered over one period

  for (std::size_t t = 0; t < n; ++t) {
    out.seasonal[t] = phase_mean[t % p];
    if (!std::isnan(out.trend[t])) {
      out.residual[t] = v[t] - out.trend[t] - out.seasonal[t];
    }
  }
  return out;
}

RollingStats rolling_stats(const Series& series, int window) {
  const std::size_t n = series.size();
  if (window < 1 || static_cast<std::size_t>(window) > n) {
    throw std::invalid_argument("rolling_stats: window must satisfy 1 <= window <= n");
  }
  const std::vector<double>& v = series.values();
  const std::size_t w = static_cast<std::size_t>(window);

  RollingStats out;
  out.window = window;
  out.mean.assign(n, kNaN);
  out.stddev.assign(n, kNaN);
  for (std::size_t t = w - 1; t < n; ++t) {
    double m = 0.0;
    for (std::size_t j = t + 1 - w; j <= t; ++j) m += v[j];
    m /= static_cast<double>(w);
    double var = 0.0;
    for (std::size_t j = t + 1 - w; j <= t; ++j) var += (v[j] - m) * (v[j] - m);
    var /= static_cast<double>(w);
    out.mean[t] = m;
    out.stddev[t] = std::sqrt(std::max(0.0, var));
  }
  return out;
}

}  // namespace tslab::indicators
