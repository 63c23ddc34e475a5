#pragma once

#include <functional>
#include <random>

#include "ast/core/reward.hpp"
#include "ast/core/simulator.hpp"
#include "ast/core/trajectory.hpp"

namespace ast {

// Supplies the action for step t (1-based). Throws std::out_of_range when a
// finite source is exhausted before the simulator terminates.
using ActionSource = std::function<EnvironmentAction(const Simulator&, int)>;

ActionSource fixed_sequence_source(std::vector<EnvironmentAction> actions);
ActionSource natural_policy_source(std::mt19937_64& rng);

// Runs one episode: initializes the simulator, then steps it with actions
// from the source until it reports terminal, scoring each transition with
// reward_step. max_steps == 0 means no guard beyond the simulator's own
// horizon; a positive guard may truncate, leaving the trajectory incomplete.
Trajectory rollout(Simulator& sim, const ActionSource& actions, const RewardSpec& spec,
                   int max_steps = 0);

} // namespace ast
