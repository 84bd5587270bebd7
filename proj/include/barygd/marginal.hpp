#pragma once

#include <optional>

#include <Eigen/Core>

#include "barygd/gaussian.hpp"
#include "barygd/rng.hpp"

namespace barygd {

// Margin by which supports are shrunk before score evaluation when a particle
// has to be pulled back inside; see ClampStats.
constexpr double kSupportMargin = 1e-6;

// Counts particles that were pulled back into a support (or a spectral grid)
// before evaluation.
struct ClampStats {
  long long clamped = 0;
};

// Axis-aligned open support box; +/- infinity marks unbounded axes.
struct Support {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  bool contains(const Eigen::VectorXd& x) const;
  // Pull x into [lower + margin, upper - margin] on bounded axes.
  Eigen::VectorXd clamp(const Eigen::VectorXd& x, double margin) const;
  bool is_unbounded() const;

  static Support unbounded(int dim);
  static Support interval(double lower, double upper);
};

// Monotone analytic 1-d maps used to push the standard normal forward.
struct PushforwardMap {
  enum class Family { identity, arctan, affine };

  Family family = Family::identity;
  double shift = 0.0;  // affine: g(z) = shift + scale * z
  double scale = 1.0;  // affine: scale > 0

  double apply(double z) const;

  static PushforwardMap identity() { return {}; }
  static PushforwardMap arctan() { return {Family::arctan}; }
  static PushforwardMap affine(double shift, double scale);
};

// A target marginal: sampler, unnormalized log-density, score and support.
// Two kinds are supported, Gaussians in any dimension and 1-d pushforwards of
// the standard normal under a monotone analytic map.
class MarginalSpec {
 public:
  static MarginalSpec gaussian(GaussianMeasure g);
  static MarginalSpec pushforward(PushforwardMap map);

  int dim() const { return dim_; }
  const Support& support() const { return support_; }

  // grad log density at x. Throws std::domain_error when x lies outside the
  // support; marginal_index (when >= 0) is included in the message.
  Eigen::VectorXd score(const Eigen::VectorXd& x, int marginal_index = -1) const;
  double log_density_unnormalized(const Eigen::VectorXd& x) const;
  Eigen::VectorXd sample(Rng& rng) const;

  // 1-d only: derivative of the score, used by the spectral backend.
  double score_derivative_1d(double x) const;

  bool is_gaussian_kind() const { return is_gaussian_; }
  // The measure as a Gaussian when it is one (includes identity and affine
  // pushforwards); nullopt for genuinely non-Gaussian targets.
  std::optional<GaussianMeasure> as_gaussian() const;
  const PushforwardMap& map() const;
  const GaussianMeasure& gaussian_params() const;

 private:
  MarginalSpec() = default;

  bool is_gaussian_ = true;
  int dim_ = 0;
  Support support_;
  std::optional<GaussianMeasure> gauss_;
  Eigen::MatrixXd precision_;      // inverse covariance (gaussian kind)
  Eigen::MatrixXd chol_;           // lower Cholesky factor (gaussian kind)
  PushforwardMap map_;
};

// grad log mu(x); free-function form of MarginalSpec::score.
inline Eigen::VectorXd marginal_score(const MarginalSpec& spec,
                                      const Eigen::VectorXd& x,
                                      int marginal_index = -1) {
  return spec.score(x, marginal_index);
}

}  // namespace barygd
