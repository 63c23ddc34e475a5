#include "ast/solvers/cem.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ast/core/rollout.hpp"

namespace ast {

void CemConfig::validate() const {
    if (population_size < 1) throw std::invalid_argument("CemConfig: population_size must be >= 1");
    if (!(elite_fraction > 0.0 && elite_fraction < 1.0)) {
        throw std::invalid_argument("CemConfig: elite_fraction must lie in (0,1)");
    }
    if (generations < 1) throw std::invalid_argument("CemConfig: generations must be >= 1");
    if (initial_std.empty()) throw std::invalid_argument("CemConfig: initial_std must be non-empty");
    for (double s : initial_std) {
        if (!(s > 0.0)) throw std::invalid_argument("CemConfig: initial_std entries must be > 0");
    }
    if (std_floor < 0.0) throw std::invalid_argument("CemConfig: std_floor must be >= 0");
}

namespace {

std::vector<EnvironmentAction> unflatten(const std::vector<double>& flat, int horizon, int dim) {
    std::vector<EnvironmentAction> actions;
    actions.reserve(horizon);
    for (int t = 0; t < horizon; ++t) {
        std::vector<double> step(flat.begin() + static_cast<long>(t) * dim,
                                 flat.begin() + static_cast<long>(t + 1) * dim);
        actions.push_back(EnvironmentAction::continuous(std::move(step)));
    }
    return actions;
}

} // namespace

SolverReport solve_cem(Simulator& sim, const RewardSpec& spec, const CemConfig& cfg) {
    cfg.validate();
    spec.validate();
    if (sim.action_mode() != ActionMode::continuous) {
        throw std::invalid_argument("solve_cem: requires a continuous-action simulator");
    }
    const int horizon = sim.horizon();
    const int dim = sim.action_dimension();
    const long flat_dim = static_cast<long>(horizon) * dim;
    if (static_cast<int>(cfg.initial_std.size()) != 1 &&
        static_cast<int>(cfg.initial_std.size()) != dim) {
        throw std::invalid_argument("CemConfig: initial_std must have 1 or action_dimension entries");
    }

    std::vector<double> mean(flat_dim, 0.0);
    std::vector<double> stddev(flat_dim);
    for (long i = 0; i < flat_dim; ++i) {
        stddev[i] = cfg.initial_std.size() == 1 ? cfg.initial_std[0]
                                                : cfg.initial_std[i % dim];
    }

    const int elite_count = std::max(
        1, static_cast<int>(std::ceil(cfg.elite_fraction * cfg.population_size)));

    std::mt19937_64 rng(cfg.rng_seed);
    std::normal_distribution<double> unit_normal(0.0, 1.0);
    detail::ReportAccumulator acc;

    std::vector<std::vector<double>> population(cfg.population_size);
    std::vector<double> fitness(cfg.population_size);

    for (int gen = 0; gen < cfg.generations; ++gen) {
        if (cfg.max_sim_steps > 0 && acc.peek().sim_steps_used >= cfg.max_sim_steps) break;

        Trajectory generation_best;
        bool have_generation_best = false;
        bool event_this_generation = false;
        for (int i = 0; i < cfg.population_size; ++i) {
            auto& sample = population[i];
            sample.resize(flat_dim);
            for (long j = 0; j < flat_dim; ++j) {
                sample[j] = mean[j] + stddev[j] * unit_normal(rng);
            }
            Trajectory trajectory =
                rollout(sim, fixed_sequence_source(unflatten(sample, horizon, dim)), spec);
            acc.add_sim_steps(trajectory.length());
            event_this_generation = event_this_generation || trajectory.found_event;
            fitness[i] = trajectory.total_reward;
            if (!have_generation_best || trajectory.total_reward > generation_best.total_reward) {
                generation_best = std::move(trajectory);
                have_generation_best = true;
            }
        }
        // One accumulator iteration per generation.
        acc.add(std::move(generation_best));
        if (event_this_generation) acc.mark_event_at_current_iteration();

        std::vector<int> order(cfg.population_size);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&fitness](int a, int b) { return fitness[a] > fitness[b]; });

        for (long j = 0; j < flat_dim; ++j) {
            double sum = 0.0;
            for (int e = 0; e < elite_count; ++e) sum += population[order[e]][j];
            const double mu = sum / elite_count;
            double var = 0.0;
            for (int e = 0; e < elite_count; ++e) {
                const double d = population[order[e]][j] - mu;
                var += d * d;
            }
            mean[j] = mu;
            stddev[j] = std::max(std::sqrt(var / elite_count), cfg.std_floor);
        }
        if (cfg.std_floor == 0.0 &&
            *std::max_element(stddev.begin(), stddev.end()) < 1e-300) {
            throw std::runtime_error("solve_cem: sampling distribution collapsed to a point");
        }
    }
    return acc.take();
}

} // namespace ast
