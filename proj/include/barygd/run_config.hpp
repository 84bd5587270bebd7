#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "barygd/ensemble.hpp"
#include "barygd/kernel.hpp"
#include "barygd/lawgd.hpp"
#include "barygd/marginal.hpp"
#include "barygd/schedule.hpp"

namespace barygd {

struct SvgdBackend {
  KernelSpec kernel;
};

// grid == nullopt derives a window per marginal (default_spectral_grid).
struct LawgdBackend {
  std::optional<SpectralGrid> grid;
  int modes = 64;
};

using BackendSpec = std::variant<SvgdBackend, LawgdBackend>;

struct InitFromMarginals {};

// Every batch starts from one shared draw of `base`, i.e. the coupling starts
// on the diagonal.
struct InitCommon {
  GaussianMeasure base;
};

using InitPolicy = std::variant<InitFromMarginals, InitCommon>;

struct EvalSpec {
  // Reference barycenter; nullopt derives it from the marginals via the
  // Gaussian fixed point (all marginals must be Gaussian-representable).
  std::optional<GaussianMeasure> reference;
  int ref_count = 10000;
  // Record the distance to the reference every `stride` iterations; 0 records
  // it at the final iteration only.
  int stride = 0;
};

struct RunConfig {
  RunConfig(std::vector<MarginalSpec> marginals_in, Weights weights_in)
      : marginals(std::move(marginals_in)), weights(std::move(weights_in)) {}

  std::vector<MarginalSpec> marginals;
  Weights weights;
  int particles = 100;
  BackendSpec backend = SvgdBackend{};
  ScheduleSpec schedule = DoublingSchedule{};
  int iterations = 500;
  std::uint64_t seed = 0;
  InitPolicy init = InitFromMarginals{};
  std::optional<EvalSpec> eval;
  int trajectory_stride = 0;

  int dim() const { return marginals.empty() ? 0 : marginals.front().dim(); }
  void validate() const;
};

}  // namespace barygd
