#pragma once

#include <Eigen/Core>

#include "barygd/kernel.hpp"
#include "barygd/marginal.hpp"

namespace barygd {

// Kernelized ascent direction of the penalization for the query particle:
//   (1/N) sum_l [ k(x_i, x_l) score(x_l) + grad_y k(x_i, x_l) ].
// The caller adds it scaled by alpha * h * w_j.
//
// When `clamp` is provided, out-of-support particles are pulled back into the
// support shrunk by kSupportMargin before their score is evaluated and the
// counter is incremented; the score blows up toward the boundary, so the
// clamped evaluation keeps the inward drift without producing NaN. Without
// `clamp` an out-of-support particle raises std::domain_error naming the
// particle (and marginal, when given).
Eigen::VectorXd svgd_direction(const Eigen::MatrixXd& batch,
                               const MarginalSpec& target,
                               const GaussianKernel& kernel, int query_index,
                               ClampStats* clamp = nullptr,
                               int marginal_index = -1);

// All query particles at once; same values as svgd_direction column by
// column, with the pairwise kernel matrix shared across queries.
Eigen::MatrixXd svgd_directions(const Eigen::MatrixXd& batch,
                                const MarginalSpec& target,
                                const GaussianKernel& kernel,
                                ClampStats* clamp = nullptr,
                                int marginal_index = -1);

}  // namespace barygd
