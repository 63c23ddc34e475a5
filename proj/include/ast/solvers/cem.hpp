#pragma once

#include <cstdint>
#include <vector>

#include "ast/core/reward.hpp"
#include "ast/core/simulator.hpp"
#include "ast/solvers/report.hpp"

namespace ast {

// Cross-entropy method over a flattened action sequence of dimension
// horizon x action_dimension. initial_std holds one entry per action
// dimension (or a single entry broadcast to all); std_floor keeps the
// sampling distribution alive after elite refits. A refit that collapses
// every coordinate below machine tolerance while std_floor is zero raises
// std::runtime_error.
struct CemConfig {
    int population_size = 50;
    double elite_fraction = 0.2;
    int generations = 50;
    std::vector<double> initial_std = {1.0};
    std::uint64_t rng_seed = 0;
    double std_floor = 1e-6;
    long max_sim_steps = 0;

    void validate() const;
};

SolverReport solve_cem(Simulator& sim, const RewardSpec& spec, const CemConfig& cfg);

} // namespace ast
