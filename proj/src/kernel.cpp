#include "barygd/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace barygd {

double GaussianKernel::eval(const Eigen::VectorXd& x,
                            const Eigen::VectorXd& y) const {
  if (x.size() != y.size()) {
    throw std::invalid_argument("kernel: dimension mismatch");
  }
  return std::exp(-(x - y).squaredNorm() / bandwidth);
}

Eigen::VectorXd GaussianKernel::grad_y(const Eigen::VectorXd& x,
                                       const Eigen::VectorXd& y) const {
  if (x.size() != y.size()) {
    throw std::invalid_argument("kernel: dimension mismatch");
  }
  return (2.0 / bandwidth) * (x - y) * eval(x, y);
}

double median_bandwidth(const Eigen::MatrixXd& points) {
  const int n = static_cast<int>(points.cols());
  if (n < 2) {
    throw std::invalid_argument("median_bandwidth: needs at least two points");
  }
  std::vector<double> sq_dists;
  sq_dists.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      sq_dists.push_back((points.col(i) - points.col(j)).squaredNorm());
    }
  }
  std::sort(sq_dists.begin(), sq_dists.end());
  const std::size_t m = sq_dists.size();
  const double median = (m % 2 == 1)
                            ? sq_dists[m / 2]
                            : 0.5 * (sq_dists[m / 2 - 1] + sq_dists[m / 2]);
  if (median == 0.0) return 1.0;
  return median / std::log(static_cast<double>(n) + 1.0);
}

void KernelSpec::validate() const {
  if (const auto* fixed = std::get_if<Fixed>(&policy)) {
    if (!(fixed->bandwidth > 0.0)) {
      throw std::invalid_argument("kernel: fixed bandwidth must be positive");
    }
  } else {
    if (std::get<MedianHeuristic>(policy).period < 1) {
      throw std::invalid_argument("kernel: refresh period must be >= 1");
    }
  }
}

bool KernelSpec::adaptive() const {
  return std::holds_alternative<MedianHeuristic>(policy);
}

bool KernelSpec::refresh_due(int iteration) const {
  if (!adaptive()) return false;
  const int period = std::get<MedianHeuristic>(policy).period;
  return (iteration - 1) % period == 0;
}

GaussianKernel KernelSpec::make(const Eigen::MatrixXd& points) const {
  if (const auto* fixed = std::get_if<Fixed>(&policy)) {
    return GaussianKernel{fixed->bandwidth};
  }
  return GaussianKernel{median_bandwidth(points)};
}

}  // namespace barygd
