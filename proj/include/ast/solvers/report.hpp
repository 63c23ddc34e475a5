#pragma once

#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ast/core/trajectory.hpp"

namespace ast {

// Common result record for every solver. best_reward_curve holds one entry
// per iteration (rollout, generation, or enumerated sequence) and is
// nondecreasing in its reward component.
struct SolverReport {
    Trajectory best_trajectory;
    long iterations_used = 0;
    long sim_steps_used = 0;
    std::vector<std::pair<long, double>> best_reward_curve;
    std::optional<long> first_event_iteration;
};

namespace detail {

// Shared bookkeeping so all solvers agree on curve/best semantics. Only
// complete trajectories (event or horizon) compete for best; a truncated
// rollout still consumes an iteration but leaves the curve flat.
class ReportAccumulator {
public:
    void add(Trajectory trajectory) {
        ++report_.iterations_used;
        if (trajectory.found_event && !report_.first_event_iteration) {
            report_.first_event_iteration = report_.iterations_used;
        }
        if (trajectory.complete() &&
            (!has_best_ || trajectory.total_reward > report_.best_trajectory.total_reward)) {
            report_.best_trajectory = std::move(trajectory);
            has_best_ = true;
        }
        report_.best_reward_curve.emplace_back(
            report_.iterations_used, has_best_ ? report_.best_trajectory.total_reward
                                               : -std::numeric_limits<double>::infinity());
    }

    void add_sim_steps(long steps) { report_.sim_steps_used += steps; }

    // For batched solvers where an event can surface in a population member
    // that is not the batch best.
    void mark_event_at_current_iteration() {
        if (!report_.first_event_iteration) {
            report_.first_event_iteration = report_.iterations_used;
        }
    }

    bool has_best() const { return has_best_; }
    const SolverReport& peek() const { return report_; }

    // Throws if the budget produced no complete rollout.
    SolverReport take() {
        if (!has_best_) {
            throw std::runtime_error("solver: budget exhausted with zero completed rollouts");
        }
        return std::move(report_);
    }

private:
    SolverReport report_;
    bool has_best_ = false;
};

} // namespace detail

} // namespace ast
