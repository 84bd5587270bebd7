#include "barygd/run_config.hpp"

#include <stdexcept>

namespace barygd {

void RunConfig::validate() const {
  if (marginals.size() < 2) {
    throw std::invalid_argument("config: needs at least two marginals");
  }
  if (static_cast<int>(marginals.size()) != weights.size()) {
    throw std::invalid_argument("config: marginal count does not match weights");
  }
  const int d = marginals.front().dim();
  for (const auto& m : marginals) {
    if (m.dim() != d) {
      throw std::invalid_argument("config: marginals of mixed dimension");
    }
  }
  if (particles < 1) {
    throw std::invalid_argument("config: particles must be >= 1");
  }
  if (iterations < 1) {
    throw std::invalid_argument("config: iterations must be >= 1");
  }
  if (trajectory_stride < 0) {
    throw std::invalid_argument("config: trajectory stride must be >= 0");
  }

  if (const auto* svgd = std::get_if<SvgdBackend>(&backend)) {
    svgd->kernel.validate();
  } else {
    const auto& lawgd = std::get<LawgdBackend>(backend);
    if (d != 1) {
      throw std::invalid_argument("config: the spectral backend is 1-d only");
    }
    if (lawgd.modes < 1) {
      throw std::invalid_argument("config: spectral mode count must be >= 1");
    }
    if (lawgd.grid && !(lawgd.grid->lower < lawgd.grid->upper)) {
      throw std::invalid_argument("config: empty spectral grid window");
    }
  }

  validate_schedule(schedule);

  if (const auto* common = std::get_if<InitCommon>(&init)) {
    if (common->base.dim() != d) {
      throw std::invalid_argument("config: init dimension mismatch");
    }
  }

  if (eval) {
    if (eval->ref_count < 1) {
      throw std::invalid_argument("config: eval ref_count must be >= 1");
    }
    if (eval->stride < 0) {
      throw std::invalid_argument("config: eval stride must be >= 0");
    }
    if (eval->reference && eval->reference->dim() != d) {
      throw std::invalid_argument("config: eval reference dimension mismatch");
    }
  }
}

}  // namespace barygd
