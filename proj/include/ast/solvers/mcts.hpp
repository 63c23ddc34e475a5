#pragma once

#include <cstdint>

#include "ast/core/reward.hpp"
#include "ast/core/simulator.hpp"
#include "ast/solvers/report.hpp"

namespace ast {

// Monte Carlo tree search with double progressive widening. Works for
// continuous, seed, and finite discrete action scenarios: action proposals
// come from the simulator's natural action distribution, and per-node child
// counts are capped at widening_k * visits^widening_alpha. Returns through an
// edge are normalized into [0,1] against the tree-wide running min/max before
// the exploration bonus is applied, so the reward's magnitude (0 versus -1e4)
// does not drown the search. -infinity returns never enter the statistics;
// such edges keep a zero exploitation value.
struct MctsConfig {
    double exploration_constant = 1.0;
    double widening_k = 2.0;
    double widening_alpha = 0.5;
    long max_iterations = 1000;
    int rollout_depth_limit = 100000;
    std::uint64_t rng_seed = 0;
    long max_sim_steps = 0;

    void validate() const;
};

SolverReport solve_mcts(Simulator& sim, const RewardSpec& spec, const MctsConfig& cfg);

} // namespace ast
