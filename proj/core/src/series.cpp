#include "tslab/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "tslab/io.hpp"

namespace tslab {

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return kDays[m - 1];
}

}  // namespace

std::optional<Date> Date::parse(std::string_view text) {
  text = trim(text);
  // Truncate a timestamp such as "2020-01-02T00:00:00" to its date part.
  if (text.size() > 10 && (text[10] == 'T' || text[10] == ' ')) {
    text = text.substr(0, 10);
  }
  int y = 0, m = 0, d = 0;
  char extra = '\0';
  std::string owned(text);
  if (std::sscanf(owned.c_str(), "%d-%d-%d%c", &y, &m, &d, &extra) != 3) {
    return std::nullopt;
  }
  if (m < 1 || m > 12 || d < 1 || d > days_in_month(y, m)) {
    return std::nullopt;
  }
  return Date{y, m, d};
}

// Civil-from-days / days-from-civil conversions (Gregorian, era arithmetic).
std::int64_t Date::ordinal() const {
  std::int64_t y = year;
  const unsigned m = static_cast<unsigned>(month);
  const unsigned d = static_cast<unsigned>(day);
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

Date Date::from_ordinal(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  return Date{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

std::string Date::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

Series::Series(std::vector<Date> timestamps, std::vector<double> values, std::string name)
    : timestamps_(std::move(timestamps)), values_(std::move(values)), name_(std::move(name)) {
  if (timestamps_.size() != values_.size()) {
    throw std::invalid_argument("Series: timestamp/value length mismatch");
  }
  for (std::size_t i = 1; i < timestamps_.size(); ++i) {
    if (!(timestamps_[i - 1] < timestamps_[i])) {
      throw std::invalid_argument("Series: timestamps must be strictly increasing");
    }
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("Series: values must be finite");
    }
  }
}

Series Series::from_values(std::vector<double> values, std::string name) {
  std::vector<Date> dates;
  dates.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    dates.push_back(Date::from_ordinal(static_cast<std::int64_t>(i)));
  }
  return Series(std::move(dates), std::move(values), std::move(name));
}

Series Series::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > size()) {
    throw std::out_of_range("Series::slice: bad range");
  }
  return Series(std::vector<Date>(timestamps_.begin() + begin, timestamps_.begin() + end),
                std::vector<double>(values_.begin() + begin, values_.begin() + end), name_);
}

Series Series::with_values(std::vector<double> values, std::string name) const {
  if (values.size() != size()) {
    throw std::invalid_argument("Series::with_values: length mismatch");
  }
  return Series(timestamps_, std::move(values), std::move(name));
}

namespace {

struct RawRow {
  Date date;
  double open, high, low, close, adj_close, volume;
};

std::size_t find_column(const std::vector<std::string>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (trim(header[i]) == name) return i;
  }
  throw std::runtime_error("ingest_csv: missing column '" + name + "'");
}

}  // namespace

IngestResult ingest_csv(const std::filesystem::path& path, const CsvSchema& schema) {
  if (!std::filesystem::exists(path)) {
    throw std::runtime_error("ingest_csv: file not found: " + path.string());
  }
  std::vector<std::string> lines = read_lines(path);
  if (lines.empty()) {
    throw std::runtime_error("ingest_csv: empty file: " + path.string());
  }

  const std::vector<std::string> header = split_csv_line(lines.front());
  const std::size_t c_date = find_column(header, schema.date);
  const std::size_t c_open = find_column(header, schema.open);
  const std::size_t c_high = find_column(header, schema.high);
  const std::size_t c_low = find_column(header, schema.low);
  const std::size_t c_close = find_column(header, schema.close);
  const std::size_t c_adj = find_column(header, schema.adj_close);
  const std::size_t c_vol = find_column(header, schema.volume);
  const std::size_t max_col =
      std::max({c_date, c_open, c_high, c_low, c_close, c_adj, c_vol});

  std::vector<RawRow> rows;
  std::size_t dropped = 0;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    if (trim(lines[li]).empty()) continue;  // blank lines are not data rows
    const std::vector<std::string> cells = split_csv_line(lines[li]);
    if (cells.size() <= max_col) {
      ++dropped;
      continue;
    }
    RawRow row;
    const auto date = Date::parse(cells[c_date]);
    bool ok = date.has_value();
    if (ok) row.date = *date;
    ok = ok && parse_double(cells[c_open], row.open);
    ok = ok && parse_double(cells[c_high], row.high);
    ok = ok && parse_double(cells[c_low], row.low);
    ok = ok && parse_double(cells[c_close], row.close);
    ok = ok && parse_double(cells[c_adj], row.adj_close);
    ok = ok && parse_double(cells[c_vol], row.volume);
    ok = ok && row.high >= row.low && row.volume >= 0.0;
    if (!ok) {
      ++dropped;
      continue;
    }
    rows.push_back(row);
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const RawRow& a, const RawRow& b) { return a.date < b.date; });

  OhlcvFrame frame;
  for (const RawRow& row : rows) {
    if (!frame.timestamps.empty() && !(frame.timestamps.back() < row.date)) {
      ++dropped;  // duplicate date; first occurrence wins
      continue;
    }
    frame.timestamps.push_back(row.date);
    frame.open.push_back(row.open);
    frame.high.push_back(row.high);
    frame.low.push_back(row.low);
    frame.close.push_back(row.close);
    frame.adj_close.push_back(row.adj_close);
    frame.volume.push_back(row.volume);
  }

  if (frame.empty()) {
    throw std::runtime_error("ingest_csv: no rows remain after cleaning: " + path.string());
  }
  return IngestResult{std::move(frame), dropped};
}

Series close_series(const OhlcvFrame& frame) { return column_series(frame, "close"); }

Series column_series(const OhlcvFrame& frame, std::string_view column) {
  if (frame.empty()) {
    throw std::runtime_error("column_series: empty frame");
  }
  const std::vector<double>* values = nullptr;
  if (column == "open") values = &frame.open;
  else if (column == "high") values = &frame.high;
  else if (column == "low") values = &frame.low;
  else if (column == "close") values = &frame.close;
  else if (column == "adj_close") values = &frame.adj_close;
  else if (column == "volume") values = &frame.volume;
  else throw std::invalid_argument("column_series: unknown column '" + std::string(column) + "'");
  return Series(frame.timestamps, *values, std::string(column));
}

SplitSpec SplitSpec::fraction(double f) {
  if (!(f > 0.0 && f < 1.0)) {
    throw std::invalid_argument("SplitSpec::fraction: must lie in (0,1)");
  }
  SplitSpec spec;
  spec.fraction_ = f;
  return spec;
}

SplitSpec SplitSpec::length(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("SplitSpec::length: must be positive");
  }
  SplitSpec spec;
  spec.length_ = n;
  return spec;
}

std::size_t SplitSpec::test_length(std::size_t n) const {
  std::size_t len = 0;
  if (fraction_) {
    len = std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(*fraction_ * static_cast<double>(n))));
  } else if (length_) {
    len = *length_;
  } else {
    throw std::invalid_argument("SplitSpec: unspecified");
  }
  if (len < 1 || len >= n) {
    throw std::invalid_argument("split: test segment must satisfy 1 <= len < n");
  }
  return len;
}

std::pair<Series, Series> split(const Series& series, const SplitSpec& spec) {
  const std::size_t test_len = spec.test_length(series.size());
  const std::size_t cut = series.size() - test_len;
  return {series.slice(0, cut), series.slice(cut, series.size())};
}

WindowSet make_windows(const Series& series, int lookback, int horizon, int stride) {
  if (lookback < 1 || horizon < 1 || stride < 1) {
    throw std::invalid_argument("make_windows: lookback, horizon, stride must be positive");
  }
  const std::size_t n = series.size();
  const std::size_t need = static_cast<std::size_t>(lookback) + static_cast<std::size_t>(horizon);
  if (need > n) {
    throw std::invalid_argument("make_windows: series too short for lookback + horizon");
  }
  const std::size_t count = (n - need) / static_cast<std::size_t>(stride) + 1;

  WindowSet ws;
  ws.lookback = lookback;
  ws.horizon = horizon;
  ws.inputs.resize(static_cast<Eigen::Index>(count), lookback);
  ws.targets.resize(static_cast<Eigen::Index>(count), horizon);
  const std::vector<double>& v = series.values();
  for (std::size_t w = 0; w < count; ++w) {
    const std::size_t start = w * static_cast<std::size_t>(stride);
    for (int j = 0; j < lookback; ++j) {
      ws.inputs(static_cast<Eigen::Index>(w), j) = v[start + static_cast<std::size_t>(j)];
    }
    for (int j = 0; j < horizon; ++j) {
      ws.targets(static_cast<Eigen::Index>(w), j) =
          v[start + static_cast<std::size_t>(lookback) + static_cast<std::size_t>(j)];
    }
  }
  return ws;
}

Scaler Scaler::fit(std::span<const double> train) {
  if (train.empty()) {
    throw std::invalid_argument("Scaler::fit: empty input");
  }
  const double n = static_cast<double>(train.size());
  double mean = 0.0;
  for (double x : train) mean += x;
  mean /= n;
  double var = 0.0;
  for (double x : train) var += (x - mean) * (x - mean);
  var /= n;  // population variance
  const double sd = std::sqrt(var);
  if (!(sd > 0.0)) {
    throw std::domain_error("Scaler::fit: zero variance");
  }
  return Scaler{mean, sd};
}

std::vector<double> Scaler::transform(std::span<const double> xs) const {
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = transform(xs[i]);
  return out;
}

std::vector<double> Scaler::inverse(std::span<const double> zs) const {
  std::vector<double> out(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) out[i] = inverse(zs[i]);
  return out;
}

Series Scaler::transform(const Series& s) const {
  return s.with_values(transform(s.view()), s.name());
}

}  // namespace tslab
