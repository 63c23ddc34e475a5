#pragma once

#include <optional>

#include "ast/core/types.hpp"

namespace ast {

// Trajectory-probability reward shape. Three cases per step:
//   event found            -> 0
//   horizon hit, no event  -> -alpha - beta * f(s)
//   mid-trajectory         -> -g(a) - eta * h(s)
// alpha may be +infinity, in which case the no-event terminal case yields
// -infinity and solvers prune such trajectories whenever a finite-reward
// alternative exists.
struct RewardSpec {
    double alpha = 0.0;
    double beta = 0.0;
    double eta = 0.0;
    bool use_terminal_heuristic = false;
    bool use_step_heuristic = false;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

// Reward for one transition. t is the 1-based step index, T the horizon.
// f_value is required at a no-event terminal when use_terminal_heuristic is
// set; h_value is required at non-terminal steps when use_step_heuristic is
// set. g defaults to -action_log_likelihood unless the outcome carries a
// scenario-supplied action_penalty.
double reward_step(const RewardSpec& spec, const StepOutcome& outcome, int t, int horizon,
                   std::optional<double> f_value = std::nullopt,
                   std::optional<double> h_value = std::nullopt);

// Same scoring with the outcome's own heuristic_metric routed to f(s) at a
// no-event terminal and to h(s) mid-trajectory.
double reward_step_outcome(const RewardSpec& spec, const StepOutcome& outcome, int t, int horizon);

} // namespace ast
