#include "barygd/lawgd.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace barygd {

namespace {

// Index and fraction for linear interpolation; x must already be clamped.
struct GridPos {
  int index;
  double frac;
};

GridPos locate(const SpectralGrid& grid, double x) {
  const double t = (x - grid.lower) / grid.spacing();
  int i = static_cast<int>(std::floor(t));
  if (i < 0) i = 0;
  if (i > grid.nodes - 2) i = grid.nodes - 2;
  return {i, t - i};
}

double clamp_query(const SpectralGrid& grid, double x, ClampStats* clamp) {
  if (x >= grid.lower && x <= grid.upper) return x;
  if (clamp != nullptr) ++clamp->clamped;
  return std::min(std::max(x, grid.lower), grid.upper);
}

}  // namespace

SpectralKernel::SpectralKernel(SpectralGrid grid, Eigen::VectorXd eigenvalues,
                               Eigen::MatrixXd eigenfunctions,
                               Eigen::MatrixXd eigenfunction_derivs)
    : grid_(grid),
      eigenvalues_(std::move(eigenvalues)),
      eigenfunctions_(std::move(eigenfunctions)),
      eigenfunction_derivs_(std::move(eigenfunction_derivs)) {}

Eigen::RowVectorXd SpectralKernel::psi_row(double x, ClampStats* clamp) const {
  const GridPos pos = locate(grid_, clamp_query(grid_, x, clamp));
  return (1.0 - pos.frac) * eigenfunctions_.row(pos.index) +
         pos.frac * eigenfunctions_.row(pos.index + 1);
}

Eigen::RowVectorXd SpectralKernel::dpsi_row(double y, ClampStats* clamp) const {
  const GridPos pos = locate(grid_, clamp_query(grid_, y, clamp));
  return (1.0 - pos.frac) * eigenfunction_derivs_.row(pos.index) +
         pos.frac * eigenfunction_derivs_.row(pos.index + 1);
}

SpectralGrid default_spectral_grid(const MarginalSpec& target, int nodes) {
  if (target.dim() != 1) {
    throw std::invalid_argument("spectral grid: target must be 1-d");
  }
  if (const auto g = target.as_gaussian()) {
    const double sd = std::sqrt(g->covariance(0, 0));
    return {g->mean[0] - 8.0 * sd, g->mean[0] + 8.0 * sd, nodes};
  }
  const double lo = target.support().lower[0];
  const double hi = target.support().upper[0];
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument(
        "spectral grid: no default window for this target, set one explicitly");
  }
  const double margin = 0.05 * (hi - lo);
  return {lo + margin, hi - margin, nodes};
}

SpectralKernel build_spectral_kernel(const MarginalSpec& target,
                                     const SpectralGrid& grid, int modes) {
  if (target.dim() != 1) {
    throw std::invalid_argument("spectral kernel: target must be 1-d");
  }
  if (!(grid.lower < grid.upper)) {
    throw std::invalid_argument("spectral kernel: empty grid window");
  }
  if (grid.nodes < 64) {
    throw std::invalid_argument("spectral kernel: needs at least 64 nodes");
  }
  if (modes < 1 || modes >= grid.nodes) {
    throw std::invalid_argument("spectral kernel: mode count out of range");
  }

  const int m = grid.nodes;
  const double dx = grid.spacing();

  // Potential V = -log density and the Schroedinger-transformed potential.
  Eigen::VectorXd x_nodes(m), v(m), w(m);
  Eigen::VectorXd point(1);
  for (int i = 0; i < m; ++i) {
    x_nodes[i] = grid.lower + i * dx;
    point[0] = x_nodes[i];
    v[i] = -target.log_density_unnormalized(point);
    const double v1 = -target.score(point)[0];
    const double v2 = -target.score_derivative_1d(x_nodes[i]);
    w[i] = 0.25 * v1 * v1 - 0.5 * v2;
  }

  const Eigen::VectorXd diag =
      Eigen::VectorXd::Constant(m, 2.0 / (dx * dx)) + w;
  const Eigen::VectorXd subdiag = Eigen::VectorXd::Constant(m - 1, -1.0 / (dx * dx));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, subdiag, Eigen::ComputeEigenvectors);
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("spectral kernel: eigensolve failed");
  }

  // Shift the spectrum so the ground state sits at zero, then drop it.
  const double ground = eig.eigenvalues()[0];
  Eigen::VectorXd eigenvalues = eig.eigenvalues().segment(1, modes).array() - ground;
  if (eigenvalues[0] <= 0.0) {
    throw std::runtime_error("spectral kernel: non-positive leading eigenvalue");
  }

  // Trapezoidal weights of the discrete stationary measure.
  Eigen::VectorXd density = (-v.array()).exp();
  Eigen::VectorXd quad = Eigen::VectorXd::Constant(m, dx);
  quad[0] *= 0.5;
  quad[m - 1] *= 0.5;
  const Eigen::VectorXd pi_weights_raw = quad.cwiseProduct(density);
  const Eigen::VectorXd pi_weights = pi_weights_raw / pi_weights_raw.sum();

  // Map phi_k back through the ground-state transform and normalize in
  // discrete L2(pi).
  const Eigen::VectorXd lift = (0.5 * v.array()).exp();
  Eigen::MatrixXd psi(m, modes);
  for (int k = 0; k < modes; ++k) {
    Eigen::VectorXd col = lift.cwiseProduct(eig.eigenvectors().col(k + 1));
    const double norm = std::sqrt(col.array().square().matrix().dot(pi_weights));
    psi.col(k) = col / norm;
  }
  if (!psi.allFinite()) {
    throw std::runtime_error(
        "spectral kernel: eigenfunction lift overflowed, shrink the window");
  }

  const Eigen::MatrixXd gram =
      psi.transpose() * pi_weights.asDiagonal() * psi;
  const double ortho_err =
      (gram - Eigen::MatrixXd::Identity(modes, modes)).cwiseAbs().maxCoeff();
  if (ortho_err > 1e-6) {
    throw std::runtime_error(
        "spectral kernel: orthonormality error " + std::to_string(ortho_err) +
        " exceeds 1e-6; the grid is too coarse or too short for the target");
  }

  // Centered differences inside, one-sided at the walls.
  Eigen::MatrixXd dpsi(m, modes);
  dpsi.row(0) = (psi.row(1) - psi.row(0)) / dx;
  dpsi.row(m - 1) = (psi.row(m - 1) - psi.row(m - 2)) / dx;
  for (int i = 1; i < m - 1; ++i) {
    dpsi.row(i) = (psi.row(i + 1) - psi.row(i - 1)) / (2.0 * dx);
  }

  return SpectralKernel(grid, std::move(eigenvalues), std::move(psi),
                        std::move(dpsi));
}

double lawgd_kernel_grad(const SpectralKernel& kernel, double x, double y,
                         ClampStats* clamp) {
  const Eigen::RowVectorXd px = kernel.psi_row(x, clamp);
  const Eigen::RowVectorXd dy = kernel.dpsi_row(y, clamp);
  return (px.array() * dy.array() / kernel.eigenvalues().transpose().array())
      .sum();
}

Eigen::VectorXd lawgd_direction(const Eigen::VectorXd& batch,
                                const SpectralKernel& kernel,
                                ClampStats* clamp) {
  const int n = static_cast<int>(batch.size());
  if (n < 1) throw std::invalid_argument("lawgd: empty batch");

  // Clamp each particle once, then reuse the clamped position on both sides
  // of the kernel.
  Eigen::VectorXd clamped(n);
  for (int i = 0; i < n; ++i) {
    clamped[i] = clamp_query(kernel.grid(), batch[i], clamp);
  }

  Eigen::RowVectorXd mean_psi = Eigen::RowVectorXd::Zero(kernel.modes());
  for (int j = 0; j < n; ++j) mean_psi += kernel.psi_row(clamped[j]);
  mean_psi /= n;
  const Eigen::RowVectorXd coeff =
      mean_psi.array() / kernel.eigenvalues().transpose().array();

  Eigen::VectorXd direction(n);
  for (int i = 0; i < n; ++i) {
    direction[i] = coeff.dot(kernel.dpsi_row(clamped[i]));
  }
  return direction;
}

Eigen::VectorXd lawgd_sample(const SpectralKernel& kernel,
                             Eigen::VectorXd initial, int iterations,
                             double step, ClampStats* clamp) {
  if (iterations < 0) {
    throw std::invalid_argument("lawgd_sample: negative iteration count");
  }
  Eigen::VectorXd batch = std::move(initial);
  for (int t = 0; t < iterations; ++t) {
    batch -= step * lawgd_direction(batch, kernel, clamp);
  }
  return batch;
}

}  // namespace barygd
