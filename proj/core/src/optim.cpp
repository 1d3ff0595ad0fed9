#include "tslab/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace tslab {

namespace {

double guarded(const std::function<double(const Eigen::VectorXd&)>& f, const Eigen::VectorXd& x) {
  const double v = f(x);
  return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& objective,
                             const Eigen::VectorXd& start, const NelderMeadOptions& options) {
  const int dim = static_cast<int>(start.size());
  if (dim < 1) {
    throw std::invalid_argument("nelder_mead: empty start point");
  }
  const int max_iter = options.max_iterations > 0 ? options.max_iterations : 200 * dim;

  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  std::vector<Eigen::VectorXd> x(static_cast<std::size_t>(dim) + 1, start);
  for (int i = 0; i < dim; ++i) {
    double step = options.initial_step;
    if (std::abs(start[i]) > 1.0) step *= std::abs(start[i]);
    x[static_cast<std::size_t>(i) + 1][i] += step;
  }
  std::vector<double> fx(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) fx[i] = guarded(objective, x[i]);

  std::vector<std::size_t> idx(x.size());
  auto sort_simplex = [&] {
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    std::vector<Eigen::VectorXd> xs(x.size());
    std::vector<double> fs(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      xs[i] = x[idx[i]];
      fs[i] = fx[idx[i]];
    }
    x.swap(xs);
    fx.swap(fs);
  };

  int iter = 0;
  bool converged = false;
  const std::size_t worst = x.size() - 1;
  for (; iter < max_iter; ++iter) {
    sort_simplex();
    if (std::isfinite(fx[0]) && std::isfinite(fx[worst]) &&
        fx[worst] - fx[0] <= options.tolerance) {
      converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(dim);
    for (std::size_t i = 0; i < worst; ++i) centroid += x[i];
    centroid /= static_cast<double>(dim);

    const Eigen::VectorXd reflected = centroid + kReflect * (centroid - x[worst]);
    const double f_reflected = guarded(objective, reflected);

    if (f_reflected < fx[0]) {
      const Eigen::VectorXd expanded = centroid + kExpand * (reflected - centroid);
      const double f_expanded = guarded(objective, expanded);
      if (f_expanded < f_reflected) {
        x[worst] = expanded;
        fx[worst] = f_expanded;
      } else {
        x[worst] = reflected;
        fx[worst] = f_reflected;
      }
    } else if (f_reflected < fx[worst - 1]) {
      x[worst] = reflected;
      fx[worst] = f_reflected;
    } else {
      const bool outside = f_reflected < fx[worst];
      const Eigen::VectorXd contracted =
          outside ? centroid + kContract * (reflected - centroid)
                  : centroid + kContract * (x[worst] - centroid);
      const double f_contracted = guarded(objective, contracted);
      if (f_contracted < std::min(f_reflected, fx[worst])) {
        x[worst] = contracted;
        fx[worst] = f_contracted;
      } else {
        for (std::size_t i = 1; i < x.size(); ++i) {
          x[i] = x[0] + kShrink * (x[i] - x[0]);
          fx[i] = guarded(objective, x[i]);
        }
      }
    }
  }

  sort_simplex();
  NelderMeadResult result;
  result.x = x[0];
  result.value = fx[0];
  result.iterations = iter;
  result.converged = converged;
  return result;
}

}  // namespace tslab
