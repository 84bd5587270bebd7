#include "barygd/gaussian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace barygd {

namespace {

Eigen::MatrixXd spd_power(const Eigen::MatrixXd& s, double exponent) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s);
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("spd_power: eigendecomposition failed");
  }
  if (eig.eigenvalues().minCoeff() <= 0.0) {
    throw std::invalid_argument("spd_power: matrix is not positive definite");
  }
  return eig.eigenvectors() *
         eig.eigenvalues().array().pow(exponent).matrix().asDiagonal() *
         eig.eigenvectors().transpose();
}

// One application of the barycenter fixed-point map.
Eigen::MatrixXd barycenter_map(const Eigen::MatrixXd& s,
                               const std::vector<GaussianMeasure>& components,
                               const Weights& weights) {
  const Eigen::MatrixXd root = spd_power(s, 0.5);
  const Eigen::MatrixXd inv_root = spd_power(s, -0.5);
  Eigen::MatrixXd mixed = Eigen::MatrixXd::Zero(s.rows(), s.cols());
  for (std::size_t i = 0; i < components.size(); ++i) {
    mixed += weights[static_cast<int>(i)] *
             spd_power(root * components[i].covariance * root, 0.5);
  }
  Eigen::MatrixXd next = inv_root * mixed * mixed * inv_root;
  return 0.5 * (next + next.transpose());
}

double bures_w2_squared_oriented(const GaussianMeasure& a,
                                 const GaussianMeasure& b) {
  const Eigen::MatrixXd root_a = spd_sqrt(a.covariance);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(root_a * b.covariance *
                                                     root_a);
  // Clamp tiny negative eigenvalues from roundoff before the square root.
  const double cross =
      eig.eigenvalues().array().max(0.0).sqrt().sum();
  return (a.mean - b.mean).squaredNorm() + a.covariance.trace() +
         b.covariance.trace() - 2.0 * cross;
}

}  // namespace

GaussianMeasure::GaussianMeasure(Eigen::VectorXd mean_in,
                                 Eigen::MatrixXd covariance_in)
    : mean(std::move(mean_in)), covariance(std::move(covariance_in)) {
  if (mean.size() == 0 || covariance.rows() != mean.size() ||
      covariance.cols() != mean.size()) {
    throw std::invalid_argument("gaussian: covariance shape does not match mean");
  }
  const double scale = std::max(1.0, covariance.cwiseAbs().maxCoeff());
  const double asym = (covariance - covariance.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale) {
    throw std::invalid_argument("gaussian: covariance is not symmetric");
  }
  covariance = 0.5 * (covariance + covariance.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(covariance);
  if (eig.info() != Eigen::Success || eig.eigenvalues().minCoeff() <= 0.0) {
    throw std::invalid_argument("gaussian: covariance is not positive definite");
  }
}

GaussianMeasure GaussianMeasure::standard(int dim) {
  return GaussianMeasure(Eigen::VectorXd::Zero(dim),
                         Eigen::MatrixXd::Identity(dim, dim));
}

Eigen::MatrixXd spd_sqrt(const Eigen::MatrixXd& s) { return spd_power(s, 0.5); }

Eigen::MatrixXd spd_inv_sqrt(const Eigen::MatrixXd& s) {
  return spd_power(s, -0.5);
}

GaussianMeasure gaussian_barycenter(const std::vector<GaussianMeasure>& components,
                                    const Weights& weights, double tol,
                                    int max_iter) {
  if (components.empty() ||
      static_cast<int>(components.size()) != weights.size()) {
    throw std::invalid_argument("gaussian_barycenter: component/weight mismatch");
  }
  const int d = components.front().dim();
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(d);
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].dim() != d) {
      throw std::invalid_argument("gaussian_barycenter: dimension mismatch");
    }
    mean += weights[static_cast<int>(i)] * components[i].mean;
    s += weights[static_cast<int>(i)] * components[i].covariance;
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("gaussian_barycenter: tol must be positive");
  }

  double change = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Eigen::MatrixXd next = barycenter_map(s, components, weights);
    change = (next - s).norm();
    s = std::move(next);
    if (change < tol) {
      return GaussianMeasure(std::move(mean), std::move(s));
    }
  }
  throw std::runtime_error(
      "gaussian_barycenter: no convergence within max_iter, last change " +
      std::to_string(change));
}

double barycenter_residual(const GaussianMeasure& candidate,
                           const std::vector<GaussianMeasure>& components,
                           const Weights& weights) {
  return (candidate.covariance -
          barycenter_map(candidate.covariance, components, weights))
      .norm();
}

double bures_w2(const GaussianMeasure& a, const GaussianMeasure& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("bures_w2: dimension mismatch");
  }
  const double squared = 0.5 * (bures_w2_squared_oriented(a, b) +
                                bures_w2_squared_oriented(b, a));
  return std::sqrt(std::max(0.0, squared));
}

Eigen::MatrixXd gaussian_sample(const GaussianMeasure& g, int count, Rng& rng) {
  if (count < 1) {
    throw std::invalid_argument("gaussian_sample: count must be >= 1");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(g.covariance);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("gaussian_sample: covariance is not SPD");
  }
  const Eigen::MatrixXd chol = llt.matrixL();
  Eigen::MatrixXd out(g.dim(), count);
  for (int i = 0; i < count; ++i) {
    out.col(i) = g.mean + chol * rng.normal_vector(g.dim());
  }
  return out;
}

}  // namespace barygd
