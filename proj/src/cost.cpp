#include "barygd/cost.hpp"

#include <stdexcept>

namespace barygd {

namespace {
void check_tuple(const Eigen::MatrixXd& tuple, const Weights& weights) {
  if (static_cast<int>(tuple.cols()) != weights.size()) {
    throw std::invalid_argument("cost: tuple length does not match weights");
  }
}
}  // namespace

double cost_value(const Eigen::MatrixXd& tuple, const Weights& weights) {
  check_tuple(tuple, weights);
  const Eigen::VectorXd center = tuple * weights.values();
  double value = 0.0;
  for (int j = 0; j < weights.size(); ++j) {
    value += weights[j] * (tuple.col(j) - center).squaredNorm();
  }
  return value;
}

Eigen::MatrixXd cost_gradient(const Eigen::MatrixXd& tuple,
                              const Weights& weights) {
  check_tuple(tuple, weights);
  const Eigen::VectorXd center = tuple * weights.values();
  Eigen::MatrixXd grad(tuple.rows(), tuple.cols());
  for (int j = 0; j < weights.size(); ++j) {
    grad.col(j) = 2.0 * weights[j] * (tuple.col(j) - center);
  }
  return grad;
}

CostReport empirical_cost(const CouplingEnsemble& ensemble) {
  const Eigen::MatrixXd center = project_barycenter(ensemble);
  Eigen::VectorXd per_particle = Eigen::VectorXd::Zero(ensemble.particles());
  for (int j = 0; j < ensemble.marginals(); ++j) {
    per_particle += ensemble.weights()[j] *
                    (ensemble.batch(j) - center).colwise().squaredNorm().transpose();
  }
  CostReport report;
  report.per_particle = std::move(per_particle);
  report.mean_cost = report.per_particle.mean();
  return report;
}

}  // namespace barygd
