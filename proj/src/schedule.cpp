#include "barygd/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace barygd {

namespace {
// Doubling stops here; the product alpha * step is already pinned, so a
// capped alpha only freezes the (negligible) cost term instead of
// overflowing.
constexpr double kAlphaCap = 1e300;
}  // namespace

void validate_schedule(const ScheduleSpec& spec) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FixedSchedule>) {
          if (!(s.alpha >= 0.0)) throw std::invalid_argument("schedule: alpha must be >= 0");
          if (!(s.step > 0.0)) throw std::invalid_argument("schedule: step must be positive");
        } else if constexpr (std::is_same_v<T, DoublingSchedule>) {
          if (!(s.alpha0 >= 0.0)) throw std::invalid_argument("schedule: alpha0 must be >= 0");
          if (!(s.step0 > 0.0)) throw std::invalid_argument("schedule: step0 must be positive");
          if (s.period < 0) throw std::invalid_argument("schedule: period must be >= 0");
        } else {
          if (!(s.alpha >= 0.0)) throw std::invalid_argument("schedule: alpha must be >= 0");
          if (!(s.eta > 0.0)) throw std::invalid_argument("schedule: eta must be positive");
          if (!(s.epsilon > 0.0)) throw std::invalid_argument("schedule: epsilon must be positive");
        }
      },
      spec);
}

Schedule::Schedule(ScheduleSpec spec) : spec_(std::move(spec)) {
  validate_schedule(spec_);
  std::visit(
      [this](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FixedSchedule>) {
          alpha_ = s.alpha;
          step_ = s.step;
        } else if constexpr (std::is_same_v<T, DoublingSchedule>) {
          alpha_ = s.alpha0;
          step_ = s.step0;
        } else {
          alpha_ = s.alpha;
          step_ = s.eta;  // refined once the first gradient arrives
        }
      },
      spec_);
}

bool Schedule::is_adagrad() const {
  return std::holds_alternative<AdagradSchedule>(spec_);
}

bool Schedule::is_doubling() const {
  return std::holds_alternative<DoublingSchedule>(spec_);
}

bool Schedule::uses_monotone_trigger() const {
  const auto* doubling = std::get_if<DoublingSchedule>(&spec_);
  return doubling != nullptr && doubling->period == 0;
}

bool Schedule::period_due(int iteration) const {
  const auto* doubling = std::get_if<DoublingSchedule>(&spec_);
  return doubling != nullptr && doubling->period > 0 &&
         iteration % doubling->period == 0;
}

void Schedule::apply_trigger(bool fired) {
  if (!fired || !is_doubling()) return;
  if (alpha_ >= kAlphaCap) return;
  alpha_ *= 2.0;
  step_ *= 0.5;
}

const std::vector<Eigen::MatrixXd>& Schedule::adagrad_steps(
    const std::vector<Eigen::MatrixXd>& gradient) {
  const auto& s = std::get<AdagradSchedule>(spec_);
  if (accumulator_.empty()) {
    for (const auto& g : gradient) {
      accumulator_.emplace_back(Eigen::MatrixXd::Zero(g.rows(), g.cols()));
    }
    steps_.resize(gradient.size());
  }
  double total = 0.0;
  long long count = 0;
  for (std::size_t j = 0; j < gradient.size(); ++j) {
    accumulator_[j].array() += gradient[j].array().square();
    steps_[j] = (s.eta / (accumulator_[j].array().sqrt() + s.epsilon)).matrix();
    total += steps_[j].sum();
    count += steps_[j].size();
  }
  step_ = total / static_cast<double>(count);
  return steps_;
}

ScheduleUpdate schedule_update(Schedule& schedule, bool trigger_fired,
                               const std::vector<Eigen::MatrixXd>* gradient) {
  schedule.apply_trigger(trigger_fired);
  if (schedule.is_adagrad() && gradient != nullptr) {
    schedule.adagrad_steps(*gradient);
  }
  return {schedule.alpha(), schedule.step()};
}

}  // namespace barygd
