#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "barygd/gaussian.hpp"

namespace barygd {

// Exact W2 between two empirical measures on R with the same number of
// atoms: root mean squared gap between sorted samples.
double empirical_w2_1d(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

// Exact W2 between two 1-d empirical measures of arbitrary sizes, by
// integrating the squared quantile gap; reduces to empirical_w2_1d for equal
// sizes.
double quantile_w2_1d(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

// Exact linear assignment (square cost matrix) via shortest augmenting paths.
struct Assignment {
  std::vector<int> column_of_row;
  double total_cost = 0.0;
};
Assignment solve_assignment(const Eigen::MatrixXd& cost);

// Exact W2 between equal-size point clouds (columns are points) through the
// assignment solver; intended for desk-scale clouds (N <= 2000).
double empirical_w2_assignment(const Eigen::MatrixXd& a,
                               const Eigen::MatrixXd& b);

// Concordance of paired samples; ties handled by the tau-b convention.
double kendall_tau(const Eigen::VectorXd& x, const Eigen::VectorXd& y);

// Gaussian kernel density estimate at one query point.
double kde_1d(const Eigen::VectorXd& samples, double bandwidth, double query);

double silverman_bandwidth(const Eigen::VectorXd& samples);

// Distance from a particle cloud to a Gaussian measure, estimated against a
// fixed reference sample drawn once from the measure: exact quantile matching
// in 1-d, and the mean of assignment distances over disjoint cloud-sized
// blocks of the reference otherwise.
class ReferenceEvaluator {
 public:
  ReferenceEvaluator(GaussianMeasure reference, int ref_count,
                     std::uint64_t seed);

  double w2(const Eigen::MatrixXd& cloud) const;
  const GaussianMeasure& reference() const { return reference_; }

 private:
  GaussianMeasure reference_;
  Eigen::MatrixXd sample_;
  Eigen::VectorXd sorted_1d_;
};

}  // namespace barygd
