#include "ast/core/rollout.hpp"

#include <stdexcept>
#include <utility>

namespace ast {

ActionSource fixed_sequence_source(std::vector<EnvironmentAction> actions) {
    return [seq = std::move(actions)](const Simulator&, int t) -> EnvironmentAction {
        const std::size_t idx = static_cast<std::size_t>(t) - 1;
        if (idx >= seq.size()) {
            throw std::out_of_range("fixed_sequence_source: exhausted before simulator terminated");
        }
        return seq[idx];
    };
}

ActionSource natural_policy_source(std::mt19937_64& rng) {
    return [&rng](const Simulator& sim, int) { return sim.sample_natural_action(rng); };
}

Trajectory rollout(Simulator& sim, const ActionSource& actions, const RewardSpec& spec,
                   int max_steps) {
    spec.validate();
    sim.initialize();
    const int horizon = sim.horizon();

    Trajectory trajectory;
    int t = 0;
    while (!sim.is_terminal()) {
        if (max_steps > 0 && t >= max_steps) break;
        ++t;
        EnvironmentAction action = actions(sim, t);
        StepOutcome outcome = sim.step(action);
        const double reward = reward_step_outcome(spec, outcome, t, horizon);

        trajectory.append(TrajectoryStep{sim.state_blob(), std::move(action), reward,
                                         outcome.action_log_likelihood, outcome.event,
                                         outcome.terminal});
        if (outcome.terminal) break;
    }
    return trajectory;
}

} // namespace ast
