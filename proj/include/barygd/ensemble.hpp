#pragma once

#include <vector>

#include <Eigen/Core>

namespace barygd {

// Strictly positive barycentric weights summing to one (within 1e-12).
class Weights {
 public:
  explicit Weights(Eigen::VectorXd values);

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[i]; }
  const Eigen::VectorXd& values() const { return values_; }

  static Weights uniform(int n);

 private:
  Eigen::VectorXd values_;
};

// N coupled particles over n marginals. batch(j).col(i) is the position of
// particle i in the batch attached to marginal j; every batch is d x N.
class CouplingEnsemble {
 public:
  CouplingEnsemble(std::vector<Eigen::MatrixXd> batches, Weights weights);

  int dim() const { return static_cast<int>(batches_.front().rows()); }
  int particles() const { return static_cast<int>(batches_.front().cols()); }
  int marginals() const { return static_cast<int>(batches_.size()); }

  const std::vector<Eigen::MatrixXd>& batches() const { return batches_; }
  const Eigen::MatrixXd& batch(int j) const { return batches_[j]; }
  const Weights& weights() const { return weights_; }

  // The n-tuple of particle i as a d x n matrix (column j = marginal j).
  Eigen::MatrixXd particle_tuple(int i) const;

 private:
  std::vector<Eigen::MatrixXd> batches_;
  Weights weights_;
};

// Pushforward of the coupling under the weighted average map: column i of the
// result is sum_j w_j * X^{i,j}.
Eigen::MatrixXd project_barycenter(const CouplingEnsemble& ensemble);

}  // namespace barygd
