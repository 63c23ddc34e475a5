#include "ast/solvers/exhaustive.hpp"

#include <stdexcept>

#include "ast/core/rollout.hpp"

namespace ast {

namespace {

struct Enumerator {
    Simulator& sim;
    const RewardSpec& spec;
    const std::vector<EnvironmentAction>& actions;
    detail::ReportAccumulator acc;

    // Replays the prefix from a fresh initialization; recurses in action
    // order so ties resolve to the lexicographically first sequence.
    void visit(std::vector<EnvironmentAction>& prefix) {
        Trajectory trajectory =
            rollout(sim, fixed_sequence_source(prefix), spec, static_cast<int>(prefix.size()));
        acc.add_sim_steps(trajectory.length());
        if (trajectory.complete()) {
            acc.add(std::move(trajectory));
            return;
        }
        if (static_cast<int>(prefix.size()) >= sim.horizon()) {
            // A compliant simulator terminates at its horizon; refuse to
            // enumerate past it.
            throw std::runtime_error("solve_exhaustive: simulator did not terminate at horizon");
        }
        for (const auto& action : actions) {
            prefix.push_back(action);
            visit(prefix);
            prefix.pop_back();
        }
    }
};

} // namespace

SolverReport solve_exhaustive(Simulator& sim, const RewardSpec& spec, long max_sequences) {
    spec.validate();
    const auto actions = sim.discrete_actions();
    if (actions.empty()) {
        throw std::invalid_argument("solve_exhaustive: simulator declares no finite action set");
    }
    double sequences = 1.0;
    for (int t = 0; t < sim.horizon(); ++t) {
        sequences *= static_cast<double>(actions.size());
        if (sequences > static_cast<double>(max_sequences)) {
            throw std::invalid_argument("solve_exhaustive: |A|^T exceeds the enumeration cap");
        }
    }

    Enumerator enumerator{sim, spec, actions, {}};
    std::vector<EnvironmentAction> prefix;
    for (const auto& action : actions) {
        prefix.push_back(action);
        enumerator.visit(prefix);
        prefix.pop_back();
    }
    return enumerator.acc.take();
}

} // namespace ast
