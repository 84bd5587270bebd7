#pragma once

#include <variant>

#include <Eigen/Core>

namespace barygd {

// Gaussian reproducing kernel exp(-|x-y|^2 / b); b = 1 is the form used in
// all fixed-bandwidth experiments.
struct GaussianKernel {
  double bandwidth = 1.0;

  double eval(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
  // Gradient with respect to the second argument.
  Eigen::VectorXd grad_y(const Eigen::VectorXd& x,
                         const Eigen::VectorXd& y) const;
};

// Median of pairwise squared distances divided by log(N+1); falls back to 1
// when all points coincide. Columns of `points` are the points.
double median_bandwidth(const Eigen::MatrixXd& points);

// Bandwidth policy: either a fixed value or the median heuristic recomputed
// every `period` iterations on the current batch.
struct KernelSpec {
  struct Fixed {
    double bandwidth = 1.0;
  };
  struct MedianHeuristic {
    int period = 1;
  };

  std::variant<Fixed, MedianHeuristic> policy = Fixed{};

  void validate() const;
  bool adaptive() const;
  // True at iterations (1-based) where an adaptive bandwidth is recomputed.
  bool refresh_due(int iteration) const;
  GaussianKernel make(const Eigen::MatrixXd& points) const;
};

}  // namespace barygd
