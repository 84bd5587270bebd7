#pragma once

#include <Eigen/Core>

#include "barygd/ensemble.hpp"

namespace barygd {

struct CostReport {
  double mean_cost = 0.0;
  Eigen::VectorXd per_particle;
};

// Multimarginal transport cost of one tuple (columns of `tuple` are the n
// marginal coordinates): sum_j w_j |x_j - T(x)|^2 with T(x) = sum_j w_j x_j.
double cost_value(const Eigen::MatrixXd& tuple, const Weights& weights);

// Gradient blocks of cost_value; column j is 2 w_j (x_j - T(x)). The closed
// form is validated against finite differences in the test suite.
Eigen::MatrixXd cost_gradient(const Eigen::MatrixXd& tuple,
                              const Weights& weights);

// Monte-Carlo cost of the coupling: per-particle tuple costs and their mean.
CostReport empirical_cost(const CouplingEnsemble& ensemble);

}  // namespace barygd
