#pragma once

#include <Eigen/Core>

#include "barygd/marginal.hpp"

namespace barygd {

// Uniform 1-d discretization window for the spectral backend.
struct SpectralGrid {
  double lower = -8.0;
  double upper = 8.0;
  int nodes = 1024;

  double spacing() const { return (upper - lower) / (nodes - 1); }
};

// Leading eigenpairs of the overdamped generator of a 1-d target, obtained
// from the ground-state (Schroedinger) transform of the generator. Evaluating
// the kernel grad_y sum_k psi_k(x) psi_k'(y) / lambda_k gives the particle
// interactions of the spectral penalization backend.
class SpectralKernel {
 public:
  SpectralKernel(SpectralGrid grid, Eigen::VectorXd eigenvalues,
                 Eigen::MatrixXd eigenfunctions,
                 Eigen::MatrixXd eigenfunction_derivs);

  const SpectralGrid& grid() const { return grid_; }
  int modes() const { return static_cast<int>(eigenvalues_.size()); }
  // Strictly positive, ascending; the zero mode of the generator is excluded.
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }
  // nodes x modes values of psi_k on the grid, orthonormal in discrete L2(pi).
  const Eigen::MatrixXd& eigenfunctions() const { return eigenfunctions_; }

  // Linear interpolation of psi_k (resp. its centered-difference derivative)
  // across all modes at once. Queries outside the window are clamped to it;
  // `clamp` counts them when provided.
  Eigen::RowVectorXd psi_row(double x, ClampStats* clamp = nullptr) const;
  Eigen::RowVectorXd dpsi_row(double y, ClampStats* clamp = nullptr) const;

 private:
  SpectralGrid grid_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenfunctions_;
  Eigen::MatrixXd eigenfunction_derivs_;
};

// Window covering the effective support of the target: mean +/- 8 sd for
// Gaussian-representable targets, the support shrunk by 5% of its width per
// side for bounded ones.
SpectralGrid default_spectral_grid(const MarginalSpec& target, int nodes = 1024);

// Finite-difference eigensolve of H = -d^2/dx^2 + W, W = V'^2/4 - V''/2, on
// the grid (Dirichlet walls), mapped back to generator eigenpairs: the ground
// state is removed, eigenvalues are shifted so it sits at zero, and the
// eigenfunctions e^{V/2} phi_k are normalized in discrete L2(pi). Throws when
// the resulting family fails the 1e-6 orthonormality check, which is the
// symptom of a window that is too short or too coarse for the target.
SpectralKernel build_spectral_kernel(const MarginalSpec& target,
                                     const SpectralGrid& grid, int modes);

// sum_k psi_k(x) psi_k'(y) / lambda_k.
double lawgd_kernel_grad(const SpectralKernel& kernel, double x, double y,
                         ClampStats* clamp = nullptr);

// Mean interaction field over the batch. The derivative lands on the moved
// particle: direction[i] = (1/N) sum_j sum_k psi_k(x_j) psi_k'(x_i) / lambda_k,
// so the drift vanishes when the batch averages of the psi_k do (i.e. at the
// target). The caller subtracts step * direction.
Eigen::VectorXd lawgd_direction(const Eigen::VectorXd& batch,
                                const SpectralKernel& kernel,
                                ClampStats* clamp = nullptr);

// The degenerate single-target dynamics: iterates
//   X^i <- X^i - step * direction[i]
// and returns the final batch. This is the n = 1 reduction of the coupled
// update (the transport cost vanishes there), kept as a directly callable
// entry point for validating the spectral backend against its target.
Eigen::VectorXd lawgd_sample(const SpectralKernel& kernel,
                             Eigen::VectorXd initial, int iterations,
                             double step, ClampStats* clamp = nullptr);

}  // namespace barygd
