#pragma once

#include <cstdint>

#include "ast/core/reward.hpp"
#include "ast/core/simulator.hpp"
#include "ast/solvers/report.hpp"

namespace ast {

// Baseline: budget i.i.d. rollouts drawn from the scenario's natural action
// distribution; returns the best. max_sim_steps > 0 additionally caps the
// total number of simulator steps.
SolverReport solve_random(Simulator& sim, const RewardSpec& spec, long budget,
                          std::uint64_t rng_seed, long max_sim_steps = 0);

} // namespace ast
