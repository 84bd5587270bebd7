#pragma once

#include <vector>

#include <Eigen/Core>

#include "barygd/ensemble.hpp"
#include "barygd/rng.hpp"

namespace barygd {

// Mean vector plus symmetric positive definite covariance.
struct GaussianMeasure {
  Eigen::VectorXd mean;
  Eigen::MatrixXd covariance;

  GaussianMeasure(Eigen::VectorXd mean_in, Eigen::MatrixXd covariance_in);

  int dim() const { return static_cast<int>(mean.size()); }

  static GaussianMeasure standard(int dim);
};

// Symmetric square root / inverse square root via eigendecomposition.
Eigen::MatrixXd spd_sqrt(const Eigen::MatrixXd& s);
Eigen::MatrixXd spd_inv_sqrt(const Eigen::MatrixXd& s);

// W2 barycenter of Gaussians: mean is the weighted mean average, covariance
// solves S = sum_i w_i (S^{1/2} S_i S^{1/2})^{1/2}. Iterates
//   S <- S^{-1/2} (sum_i w_i (S^{1/2} S_i S^{1/2})^{1/2})^2 S^{-1/2}
// from S = sum_i w_i S_i until successive iterates are closer than tol in
// Frobenius norm. Throws std::runtime_error with the last residual if the
// iteration does not settle within max_iter steps.
GaussianMeasure gaussian_barycenter(const std::vector<GaussianMeasure>& components,
                                    const Weights& weights, double tol = 1e-13,
                                    int max_iter = 2000);

// Frobenius distance between S and the barycenter map applied to S; zero at
// the fixed point.
double barycenter_residual(const GaussianMeasure& candidate,
                           const std::vector<GaussianMeasure>& components,
                           const Weights& weights);

// Bures form: sqrt(|m1-m2|^2 + tr(S1 + S2 - 2 (S1^{1/2} S2 S1^{1/2})^{1/2})),
// evaluated in both argument orders and averaged.
double bures_w2(const GaussianMeasure& a, const GaussianMeasure& b);

// count i.i.d. draws via the Cholesky factor; column per draw.
Eigen::MatrixXd gaussian_sample(const GaussianMeasure& g, int count, Rng& rng);

}  // namespace barygd
