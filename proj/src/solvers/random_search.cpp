#include "ast/solvers/random_search.hpp"

#include <random>
#include <stdexcept>

#include "ast/core/rollout.hpp"

namespace ast {

SolverReport solve_random(Simulator& sim, const RewardSpec& spec, long budget,
                          std::uint64_t rng_seed, long max_sim_steps) {
    if (budget < 1) throw std::invalid_argument("solve_random: budget must be >= 1");
    spec.validate();

    std::mt19937_64 rng(rng_seed);
    auto policy = natural_policy_source(rng);
    detail::ReportAccumulator acc;

    for (long i = 0; i < budget; ++i) {
        if (max_sim_steps > 0 && acc.peek().sim_steps_used >= max_sim_steps) break;
        Trajectory trajectory = rollout(sim, policy, spec);
        acc.add_sim_steps(trajectory.length());
        acc.add(std::move(trajectory));
    }
    return acc.take();
}

} // namespace ast
