#include "barygd/svgd.hpp"

#include <stdexcept>
#include <string>

namespace barygd {

namespace {

// Scores of all batch particles, clamping into the shrunk support when
// requested.
Eigen::MatrixXd batch_scores(const Eigen::MatrixXd& batch,
                             const MarginalSpec& target, ClampStats* clamp,
                             int marginal_index) {
  Eigen::MatrixXd scores(batch.rows(), batch.cols());
  for (int l = 0; l < batch.cols(); ++l) {
    Eigen::VectorXd x = batch.col(l);
    if (!target.support().contains(x)) {
      if (clamp == nullptr) {
        std::string msg = "svgd: particle " + std::to_string(l);
        if (marginal_index >= 0) {
          msg += " of marginal " + std::to_string(marginal_index);
        }
        throw std::domain_error(msg + " lies outside the target support");
      }
      x = target.support().clamp(x, kSupportMargin);
      ++clamp->clamped;
    }
    scores.col(l) = target.score(x, marginal_index);
  }
  return scores;
}

Eigen::MatrixXd kernel_matrix(const Eigen::MatrixXd& batch, double bandwidth) {
  const Eigen::VectorXd sq_norms = batch.colwise().squaredNorm();
  Eigen::MatrixXd k = -2.0 * batch.transpose() * batch;
  k.rowwise() += sq_norms.transpose();
  k.colwise() += sq_norms;
  return (-k / bandwidth).array().exp();
}

}  // namespace

Eigen::VectorXd svgd_direction(const Eigen::MatrixXd& batch,
                               const MarginalSpec& target,
                               const GaussianKernel& kernel, int query_index,
                               ClampStats* clamp, int marginal_index) {
  const int n = static_cast<int>(batch.cols());
  if (n < 1) throw std::invalid_argument("svgd: empty batch");
  if (query_index < 0 || query_index >= n) {
    throw std::invalid_argument("svgd: query index out of range");
  }
  const Eigen::MatrixXd scores =
      batch_scores(batch, target, clamp, marginal_index);
  const Eigen::VectorXd query = batch.col(query_index);
  Eigen::VectorXd direction = Eigen::VectorXd::Zero(batch.rows());
  for (int l = 0; l < n; ++l) {
    const double k = kernel.eval(query, batch.col(l));
    direction += k * scores.col(l) + kernel.grad_y(query, batch.col(l));
  }
  return direction / n;
}

Eigen::MatrixXd svgd_directions(const Eigen::MatrixXd& batch,
                                const MarginalSpec& target,
                                const GaussianKernel& kernel,
                                ClampStats* clamp, int marginal_index) {
  const int n = static_cast<int>(batch.cols());
  if (n < 1) throw std::invalid_argument("svgd: empty batch");
  const Eigen::MatrixXd scores =
      batch_scores(batch, target, clamp, marginal_index);
  const Eigen::MatrixXd k = kernel_matrix(batch, kernel.bandwidth);
  // Column i: sum_l k(i,l) score_l + (2/b) (x_i sum_l k(i,l) - sum_l x_l k(i,l))
  Eigen::MatrixXd direction = scores * k;
  const Eigen::VectorXd row_sums = k.rowwise().sum();
  direction += (2.0 / kernel.bandwidth) *
               (batch * row_sums.asDiagonal() - batch * k);
  return direction / n;
}

}  // namespace barygd
