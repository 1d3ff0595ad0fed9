#pragma once

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tslab {

/// Calendar date. Comparable, printable as YYYY-MM-DD.
struct Date {
  int year = 1970;
  int month = 1;
  int day = 1;

  /// Accepts "YYYY-MM-DD"; a longer ISO-8601 timestamp is truncated to its
  /// date part. Returns nullopt for anything unparseable or out of range.
  static std::optional<Date> parse(std::string_view text);
  static Date from_ordinal(std::int64_t days_since_epoch);

  /// Days since 1970-01-01 (proleptic Gregorian).
  std::int64_t ordinal() const;
  Date plus_days(std::int64_t n) const { return from_ordinal(ordinal() + n); }
  std::string to_string() const;

  friend auto operator<=>(const Date&, const Date&) = default;
};

/// Ordered univariate series. Invariants enforced on construction:
/// strictly increasing timestamps, finite values, equal lengths.
class Series {
 public:
  Series() = default;
  Series(std::vector<Date> timestamps, std::vector<double> values, std::string name);

  /// Consecutive calendar days starting 1970-01-01; handy for synthetic data.
  static Series from_values(std::vector<double> values, std::string name = "series");

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const std::vector<Date>& timestamps() const { return timestamps_; }
  const std::vector<double>& values() const { return values_; }
  std::span<const double> view() const { return values_; }
  const std::string& name() const { return name_; }
  double operator[](std::size_t i) const { return values_[i]; }

  /// Sub-series over [begin, end).
  Series slice(std::size_t begin, std::size_t end) const;

  /// Same timestamps, different values (lengths must match).
  Series with_values(std::vector<double> values, std::string name) const;

 private:
  std::vector<Date> timestamps_;
  std::vector<double> values_;
  std::string name_;
};

/// Daily market data columns. Row-wise invariants (high >= low,
/// volume >= 0, strictly increasing dates) are established by ingest_csv.
struct OhlcvFrame {
  std::vector<Date> timestamps;
  std::vector<double> open;
  std::vector<double> high;
  std::vector<double> low;
  std::vector<double> close;
  std::vector<double> adj_close;
  std::vector<double> volume;

  std::size_t size() const { return timestamps.size(); }
  bool empty() const { return timestamps.empty(); }
};

/// Maps canonical column roles to CSV header names. Defaults follow the
/// Yahoo Finance export layout.
struct CsvSchema {
  std::string date = "Date";
  std::string open = "Open";
  std::string high = "High";
  std::string low = "Low";
  std::string close = "Close";
  std::string adj_close = "Adj Close";
  std::string volume = "Volume";
};

struct IngestResult {
  OhlcvFrame frame;
  std::size_t dropped_rows = 0;  // unparseable, duplicate-date, or invariant-violating rows
};

/// Reads an OHLCV CSV (header required, comma-delimited, '.' decimals).
/// Rows are sorted ascending by date; rows with missing/unparseable cells,
/// duplicate dates (first kept), high < low, or negative volume are dropped
/// and counted. Throws std::runtime_error on missing file, missing column,
/// or when no rows survive cleaning.
IngestResult ingest_csv(const std::filesystem::path& path, const CsvSchema& schema = {});

/// Series over the close column, named "close". Throws on empty frame.
Series close_series(const OhlcvFrame& frame);

/// Series over any OHLCV column: "open", "high", "low", "close",
/// "adj_close", or "volume".
Series column_series(const OhlcvFrame& frame, std::string_view column);

/// Holdout specification: either a fraction of the series (floor, at least
/// one point) or an absolute point count.
class SplitSpec {
 public:
  static SplitSpec fraction(double f);
  static SplitSpec length(std::size_t n);

  /// Resolved test-segment length for a series of n points.
  /// Throws std::invalid_argument when the split is infeasible.
  std::size_t test_length(std::size_t n) const;

 private:
  SplitSpec() = default;
  std::optional<double> fraction_;
  std::optional<std::size_t> length_;
};

/// Chronological split: train = first n - test_len points, test = the rest.
/// Concatenation reproduces the input exactly.
std::pair<Series, Series> split(const Series& series, const SplitSpec& spec);

/// Supervised windows: row i of `inputs` holds `lookback` consecutive values
/// and row i of `targets` the `horizon` values that immediately follow.
struct WindowSet {
  Eigen::MatrixXd inputs;   // count x lookback
  Eigen::MatrixXd targets;  // count x horizon
  int lookback = 0;
  int horizon = 0;

  std::size_t count() const { return static_cast<std::size_t>(inputs.rows()); }
};

/// Stride-spaced contiguous windows; count = floor((n-L-H)/stride) + 1.
/// Throws std::invalid_argument when L + H > n.
WindowSet make_windows(const Series& series, int lookback, int horizon, int stride = 1);

/// Mean/std pair fitted on training data (population standard deviation).
struct Scaler {
  double mean = 0.0;
  double stddev = 1.0;

  /// Throws std::domain_error when the data has zero variance.
  static Scaler fit(std::span<const double> train);

  double transform(double x) const { return (x - mean) / stddev; }
  double inverse(double z) const { return z * stddev + mean; }
  std::vector<double> transform(std::span<const double> xs) const;
  std::vector<double> inverse(std::span<const double> zs) const;
  Series transform(const Series& s) const;
};

}  // namespace tslab
