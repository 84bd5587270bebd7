#include "barygd/marginal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/Cholesky>

namespace barygd {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kHalfPi = 1.57079632679489661923;

[[noreturn]] void throw_out_of_support(int marginal_index) {
  std::string msg = "point outside the support";
  if (marginal_index >= 0) {
    msg += " of marginal " + std::to_string(marginal_index);
  }
  throw std::domain_error(msg);
}
}  // namespace

bool Support::contains(const Eigen::VectorXd& x) const {
  for (int a = 0; a < x.size(); ++a) {
    if (!(x[a] > lower[a] && x[a] < upper[a])) return false;
  }
  return true;
}

Eigen::VectorXd Support::clamp(const Eigen::VectorXd& x, double margin) const {
  Eigen::VectorXd out = x;
  for (int a = 0; a < x.size(); ++a) {
    if (std::isfinite(lower[a]) && out[a] < lower[a] + margin) {
      out[a] = lower[a] + margin;
    }
    if (std::isfinite(upper[a]) && out[a] > upper[a] - margin) {
      out[a] = upper[a] - margin;
    }
  }
  return out;
}

bool Support::is_unbounded() const {
  return !lower.array().isFinite().any() && !upper.array().isFinite().any();
}

Support Support::unbounded(int dim) {
  return {Eigen::VectorXd::Constant(dim, -kInf),
          Eigen::VectorXd::Constant(dim, kInf)};
}

Support Support::interval(double lower, double upper) {
  return {Eigen::VectorXd::Constant(1, lower),
          Eigen::VectorXd::Constant(1, upper)};
}

double PushforwardMap::apply(double z) const {
  switch (family) {
    case Family::identity:
      return z;
    case Family::arctan:
      return std::atan(z);
    case Family::affine:
      return shift + scale * z;
  }
  throw std::logic_error("pushforward: unknown map family");
}

PushforwardMap PushforwardMap::affine(double shift, double scale) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("pushforward: affine scale must be positive");
  }
  return {Family::affine, shift, scale};
}

MarginalSpec MarginalSpec::gaussian(GaussianMeasure g) {
  MarginalSpec spec;
  spec.is_gaussian_ = true;
  spec.dim_ = g.dim();
  spec.support_ = Support::unbounded(g.dim());
  Eigen::LLT<Eigen::MatrixXd> llt(g.covariance);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument("marginal: covariance is not SPD");
  }
  spec.chol_ = llt.matrixL();
  spec.precision_ =
      llt.solve(Eigen::MatrixXd::Identity(g.dim(), g.dim()));
  spec.gauss_ = std::move(g);
  return spec;
}

MarginalSpec MarginalSpec::pushforward(PushforwardMap map) {
  MarginalSpec spec;
  spec.is_gaussian_ = false;
  spec.dim_ = 1;
  spec.map_ = map;
  spec.support_ = map.family == PushforwardMap::Family::arctan
                      ? Support::interval(-kHalfPi, kHalfPi)
                      : Support::unbounded(1);
  return spec;
}

Eigen::VectorXd MarginalSpec::score(const Eigen::VectorXd& x,
                                    int marginal_index) const {
  if (x.size() != dim_) {
    throw std::invalid_argument("marginal score: dimension mismatch");
  }
  if (!support_.contains(x)) throw_out_of_support(marginal_index);
  if (is_gaussian_) {
    return -(precision_ * (x - gauss_->mean));
  }
  Eigen::VectorXd out(1);
  switch (map_.family) {
    case PushforwardMap::Family::identity:
      out[0] = -x[0];
      break;
    case PushforwardMap::Family::arctan: {
      const double t = std::tan(x[0]);
      out[0] = t * (1.0 - t * t);
      break;
    }
    case PushforwardMap::Family::affine:
      out[0] = -(x[0] - map_.shift) / (map_.scale * map_.scale);
      break;
  }
  return out;
}

double MarginalSpec::log_density_unnormalized(const Eigen::VectorXd& x) const {
  if (x.size() != dim_) {
    throw std::invalid_argument("marginal log-density: dimension mismatch");
  }
  if (!support_.contains(x)) throw_out_of_support(-1);
  if (is_gaussian_) {
    const Eigen::VectorXd centered = x - gauss_->mean;
    return -0.5 * centered.dot(precision_ * centered);
  }
  switch (map_.family) {
    case PushforwardMap::Family::identity:
      return -0.5 * x[0] * x[0];
    case PushforwardMap::Family::arctan: {
      // density of arctan # N(0,1): phi(tan y) * sec^2 y
      const double t = std::tan(x[0]);
      return -0.5 * t * t + std::log1p(t * t);
    }
    case PushforwardMap::Family::affine: {
      const double z = (x[0] - map_.shift) / map_.scale;
      return -0.5 * z * z;
    }
  }
  throw std::logic_error("pushforward: unknown map family");
}

Eigen::VectorXd MarginalSpec::sample(Rng& rng) const {
  if (is_gaussian_) {
    return gauss_->mean + chol_ * rng.normal_vector(dim_);
  }
  Eigen::VectorXd out(1);
  out[0] = map_.apply(rng.normal());
  return out;
}

double MarginalSpec::score_derivative_1d(double x) const {
  if (dim_ != 1) {
    throw std::invalid_argument("score_derivative_1d: marginal is not 1-d");
  }
  if (is_gaussian_) {
    return -precision_(0, 0);
  }
  switch (map_.family) {
    case PushforwardMap::Family::identity:
      return -1.0;
    case PushforwardMap::Family::arctan: {
      const double t = std::tan(x);
      return (1.0 + t * t) * (1.0 - 3.0 * t * t);
    }
    case PushforwardMap::Family::affine:
      return -1.0 / (map_.scale * map_.scale);
  }
  throw std::logic_error("pushforward: unknown map family");
}

std::optional<GaussianMeasure> MarginalSpec::as_gaussian() const {
  if (is_gaussian_) return gauss_;
  switch (map_.family) {
    case PushforwardMap::Family::identity:
      return GaussianMeasure::standard(1);
    case PushforwardMap::Family::affine: {
      Eigen::VectorXd m = Eigen::VectorXd::Constant(1, map_.shift);
      Eigen::MatrixXd s =
          Eigen::MatrixXd::Constant(1, 1, map_.scale * map_.scale);
      return GaussianMeasure(std::move(m), std::move(s));
    }
    case PushforwardMap::Family::arctan:
      return std::nullopt;
  }
  return std::nullopt;
}

const PushforwardMap& MarginalSpec::map() const {
  if (is_gaussian_) {
    throw std::logic_error("marginal: gaussian kind has no pushforward map");
  }
  return map_;
}

const GaussianMeasure& MarginalSpec::gaussian_params() const {
  if (!is_gaussian_) {
    throw std::logic_error("marginal: pushforward kind has no gaussian params");
  }
  return *gauss_;
}

}  // namespace barygd
