#pragma once

#include <string>
#include <vector>

#include "ast/core/types.hpp"

namespace ast {

struct TrajectoryStep {
    std::string state_blob;
    EnvironmentAction action;
    double reward = 0.0;
    double action_log_likelihood = 0.0;
    bool event = false;
    bool terminal = false;
};

// Ordered record of one rollout. total_reward and total_log_likelihood are
// plain sums over steps. found_event and horizon_reached are mutually
// exclusive; both false means the rollout was truncated before the simulator
// terminated (depth guard).
struct Trajectory {
    std::vector<TrajectoryStep> steps;
    double total_reward = 0.0;
    double total_log_likelihood = 0.0;
    bool found_event = false;
    bool horizon_reached = false;

    int length() const { return static_cast<int>(steps.size()); }
    bool complete() const { return found_event || horizon_reached; }

    void append(TrajectoryStep step);
};

// Three-way comparison: positive if a ranks above b, negative if below,
// zero if tied. Event-bearing trajectories always rank above non-event ones;
// among event-bearing trajectories the more likely one wins.
int trajectory_compare(const Trajectory& a, const Trajectory& b);

} // namespace ast
