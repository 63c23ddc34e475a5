#pragma once

#include "ast/core/reward.hpp"
#include "ast/core/simulator.hpp"
#include "ast/solvers/report.hpp"

namespace ast {

// Ground-truth oracle: enumerates every action sequence of a simulator with
// a declared finite action set and returns the global reward optimum.
// Requires |A|^T <= max_sequences (default 1e6); throws std::invalid_argument
// otherwise or when the simulator declares no discrete actions.
SolverReport solve_exhaustive(Simulator& sim, const RewardSpec& spec,
                              long max_sequences = 1'000'000);

} // namespace ast
