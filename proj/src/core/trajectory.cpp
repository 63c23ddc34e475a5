#include "ast/core/trajectory.hpp"

namespace ast {

namespace {

int compare_doubles(double x, double y) {
    if (x > y) return 1;
    if (x < y) return -1;
    return 0;
}

} // namespace

void Trajectory::append(TrajectoryStep step) {
    total_reward += step.reward;
    total_log_likelihood += step.action_log_likelihood;
    if (step.terminal) {
        found_event = step.event;
        horizon_reached = !step.event;
    }
    steps.push_back(std::move(step));
}

int trajectory_compare(const Trajectory& a, const Trajectory& b) {
    if (a.found_event != b.found_event) {
        return a.found_event ? 1 : -1;
    }
    if (a.found_event) {
        if (int c = compare_doubles(a.total_log_likelihood, b.total_log_likelihood)) return c;
        return compare_doubles(a.total_reward, b.total_reward);
    }
    if (int c = compare_doubles(a.total_reward, b.total_reward)) return c;
    return compare_doubles(a.total_log_likelihood, b.total_log_likelihood);
}

} // namespace ast
