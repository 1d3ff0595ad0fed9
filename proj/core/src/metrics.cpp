#include "tslab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tslab/io.hpp"

namespace tslab {

namespace {
constexpr double kEps = 1e-12;
}

MetricReport evaluate(std::span<const double> actual, std::span<const double> predicted,
                      std::string model_name) {
  if (actual.size() != predicted.size()) {
    throw std::invalid_argument("evaluate: length mismatch");
  }
  if (actual.empty()) {
    throw std::invalid_argument("evaluate: empty input");
  }
  for (std::size_t i = 0; i < actual.size(); ++i) {
    if (!std::isfinite(actual[i]) || !std::isfinite(predicted[i])) {
      throw std::invalid_argument("evaluate: inputs must be finite");
    }
  }

  const double n = static_cast<double>(actual.size());
  double abs_sum = 0.0;
  double sq_sum = 0.0;
  double ape_sum = 0.0;
  std::size_t ape_terms = 0;
  double sape_sum = 0.0;

  for (std::size_t i = 0; i < actual.size(); ++i) {
    const double err = actual[i] - predicted[i];
    abs_sum += std::abs(err);
    sq_sum += err * err;

    if (std::abs(actual[i]) >= kEps) {
      ape_sum += std::abs(err / actual[i]);
      ++ape_terms;
    }

    const double denom = (std::abs(actual[i]) + std::abs(predicted[i])) / 2.0;
    if (denom >= kEps) {
      sape_sum += std::abs(err) / denom;
    }
    // both magnitudes below epsilon: the term counts as 0
  }

  if (ape_terms == 0) {
    throw std::domain_error("evaluate: MAPE undefined, every actual is (near) zero");
  }

  MetricReport r;
  r.model_name = std::move(model_name);
  r.mae = abs_sum / n;
  r.mse = sq_sum / n;
  r.rmse = std::sqrt(r.mse);
  r.mape = ape_sum / static_cast<double>(ape_terms) * 100.0;
  r.smape = sape_sum / n * 100.0;
  r.mape_skipped = actual.size() - ape_terms;
  return r;
}

std::string render_report_table(const std::vector<MetricReport>& reports) {
  if (reports.empty()) {
    throw std::invalid_argument("render_report_table: empty report list");
  }
  const std::vector<std::string> header = {"Model", "MAE", "MSE", "RMSE", "MAPE", "SMAPE"};
  std::vector<std::vector<std::string>> rows;
  rows.push_back(header);
  for (const MetricReport& r : reports) {
    rows.push_back({r.model_name, format_fixed(r.mae, 2), format_fixed(r.mse, 2),
                    format_fixed(r.rmse, 2), format_fixed(r.mape, 2) + "%",
                    format_fixed(r.smape, 2) + "%"});
  }

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }

  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::string cell = row[c];
      cell.resize(width[c], ' ');
      out += cell;
      if (c + 1 < row.size()) out += " | ";
    }
    out += '\n';
  }
  return out;
}

std::string report_to_csv(const std::vector<MetricReport>& reports) {
  std::string out = "model,mae,mse,rmse,mape,smape\n";
  for (const MetricReport& r : reports) {
    out += r.model_name;
    out += ',';
    out += format_double(r.mae);
    out += ',';
    out += format_double(r.mse);
    out += ',';
    out += format_double(r.rmse);
    out += ',';
    out += format_double(r.mape);
    out += ',';
    out += format_double(r.smape);
    out += '\n';
  }
  return out;
}

void write_report_csv(const std::vector<MetricReport>& reports,
                      const std::filesystem::path& path) {
  if (reports.empty()) {
    throw std::invalid_argument("write_report_csv: empty report list");
  }
  write_text_file(path, report_to_csv(reports));
}

}  // namespace tslab
