#include "barygd/ensemble.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace barygd {

namespace {
constexpr double kWeightSumTol = 1e-12;
}

Weights::Weights(Eigen::VectorXd values) : values_(std::move(values)) {
  if (values_.size() == 0) {
    throw std::invalid_argument("weights: empty vector");
  }
  for (int i = 0; i < values_.size(); ++i) {
    if (!(values_[i] > 0.0)) {
      throw std::invalid_argument("weights: entry " + std::to_string(i) +
                                  " is not strictly positive");
    }
  }
  const double sum = values_.sum();
  if (std::abs(sum - 1.0) > kWeightSumTol) {
    throw std::invalid_argument("weights: sum deviates from 1 by " +
                                std::to_string(std::abs(sum - 1.0)));
  }
}

Weights Weights::uniform(int n) {
  return Weights(Eigen::VectorXd::Constant(n, 1.0 / n));
}

CouplingEnsemble::CouplingEnsemble(std::vector<Eigen::MatrixXd> batches,
                                   Weights weights)
    : batches_(std::move(batches)), weights_(std::move(weights)) {
  if (batches_.size() < 2) {
    throw std::invalid_argument("ensemble: needs at least two marginals");
  }
  if (static_cast<int>(batches_.size()) != weights_.size()) {
    throw std::invalid_argument("ensemble: batch count does not match weights");
  }
  const auto rows = batches_.front().rows();
  const auto cols = batches_.front().cols();
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("ensemble: empty batch");
  }
  for (const auto& b : batches_) {
    if (b.rows() != rows || b.cols() != cols) {
      throw std::invalid_argument("ensemble: inconsistent batch shapes");
    }
    if (!b.allFinite()) {
      throw std::invalid_argument("ensemble: non-finite coordinate");
    }
  }
}

Eigen::MatrixXd CouplingEnsemble::particle_tuple(int i) const {
  Eigen::MatrixXd tuple(dim(), marginals());
  for (int j = 0; j < marginals(); ++j) tuple.col(j) = batches_[j].col(i);
  return tuple;
}

Eigen::MatrixXd project_barycenter(const CouplingEnsemble& ensemble) {
  Eigen::MatrixXd out =
      Eigen::MatrixXd::Zero(ensemble.dim(), ensemble.particles());
  for (int j = 0; j < ensemble.marginals(); ++j) {
    out += ensemble.weights()[j] * ensemble.batch(j);
  }
  return out;
}

}  // namespace barygd
