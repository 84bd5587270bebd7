#pragma once

#include <variant>
#include <vector>

#include <Eigen/Core>

namespace barygd {

struct FixedSchedule {
  double alpha = 1000.0;
  double step = 1e-4;
};

// Doubles alpha and halves the step on trigger, keeping alpha * step constant
// exactly. period == 0 means the monotone-coupling trigger (1-d ensembles);
// a positive period fires every `period` iterations instead.
struct DoublingSchedule {
  double alpha0 = 1000.0;
  double step0 = 0.1;
  int period = 0;
};

// Per-coordinate steps eta / (sqrt(accumulated squared gradient) + epsilon);
// alpha stays fixed. The accumulator sees the full combined update vector.
struct AdagradSchedule {
  double alpha = 1000.0;
  double eta = 0.1;
  double epsilon = 1e-8;
};

using ScheduleSpec = std::variant<FixedSchedule, DoublingSchedule, AdagradSchedule>;

void validate_schedule(const ScheduleSpec& spec);

// Run-time (alpha_t, h_t) state.
class Schedule {
 public:
  explicit Schedule(ScheduleSpec spec);

  const ScheduleSpec& spec() const { return spec_; }
  double alpha() const { return alpha_; }
  // Scalar step; for AdaGrad this is the mean of the last per-coordinate
  // steps (diagnostic value only).
  double step() const { return step_; }

  bool is_adagrad() const;
  bool is_doubling() const;
  // True when the doubling trigger is the monotone-coupling test.
  bool uses_monotone_trigger() const;
  bool period_due(int iteration) const;

  // Doubling update; ignored by the other policies.
  void apply_trigger(bool fired);

  // AdaGrad update: accumulate the squared combined gradient and return the
  // per-coordinate steps for this iteration (one matrix per batch).
  const std::vector<Eigen::MatrixXd>& adagrad_steps(
      const std::vector<Eigen::MatrixXd>& gradient);

 private:
  ScheduleSpec spec_;
  double alpha_ = 0.0;
  double step_ = 0.0;
  std::vector<Eigen::MatrixXd> accumulator_;
  std::vector<Eigen::MatrixXd> steps_;
};

struct ScheduleUpdate {
  double alpha;
  double step;
};

// One schedule transition: the doubling trigger first, then the AdaGrad
// accumulator when a gradient is supplied. Returns the parameters the
// current iteration should use.
ScheduleUpdate schedule_update(Schedule& schedule, bool trigger_fired,
                               const std::vector<Eigen::MatrixXd>* gradient = nullptr);

}  // namespace barygd
