#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace tslab {

/// Five-metric bundle for one model. mape/smape are stored as percent
/// values (smape bounded by 200); formatting adds the '%' sign.
struct MetricReport {
  std::string model_name;
  double mae = 0.0;
  double mse = 0.0;
  double rmse = 0.0;
  double mape = 0.0;
  double smape = 0.0;
  std::size_t mape_skipped = 0;  // terms dropped because |actual| < epsilon
};

/// MAE, MSE, RMSE, MAPE, SMAPE of a forecast against actuals.
/// MAPE skips terms with |actual| < 1e-12 (count reported); a SMAPE term is
/// 0 when both |actual| and |predicted| are below that epsilon.
/// Throws std::invalid_argument on length mismatch / empty input and
/// std::domain_error when every MAPE term is skipped.
MetricReport evaluate(std::span<const double> actual, std::span<const double> predicted,
                      std::string model_name);

/// Aligned text table, columns Model | MAE | MSE | RMSE | MAPE | SMAPE,
/// two decimals, rows in the given order. Throws on an empty list.
std::string render_report_table(const std::vector<MetricReport>& reports);

/// Machine-readable rows: header "model,mae,mse,rmse,mape,smape", full
/// double precision.
std::string report_to_csv(const std::vector<MetricReport>& reports);

void write_report_csv(const std::vector<MetricReport>& reports,
                      const std::filesystem::path& path);

}  // namespace tslab
