#include <doctest.h>

#include <cmath>
#include <limits>

#include "ast/sim/cartpole.hpp"
#include "ast/sim/chain.hpp"
#include "ast/solvers/cem.hpp"
#include "ast/solvers/exhaustive.hpp"
#include "ast/solvers/mcts.hpp"
#include "ast/solvers/random_search.hpp"
#include "support/test_sims.hpp"

using namespace ast;
using ast::sim::ChainParams;
using ast::sim::ChainSimulator;
using ast::testing::QuadraticTargetSim;

namespace {

// Frozen instance used across the solver checks: walk {stay 0.7, +1 0.2,
// +2 0.1}, failure at position 5, horizon 5. Best failure pays for two
// pre-event steps, one +1 and one +2, so the optimum is ln(0.2) + ln(0.1).
const double kChainOptimum = std::log(0.2) + std::log(0.1);

ChainParams default_chain() { return ChainParams{}; }

RewardSpec chain_reward() {
    RewardSpec spec;
    spec.alpha = 100.0;
    return spec;
}

bool reports_equal(const SolverReport& a, const SolverReport& b) {
    if (a.iterations_used != b.iterations_used) return false;
    if (a.sim_steps_used != b.sim_steps_used) return false;
    if (a.first_event_iteration != b.first_event_iteration) return false;
    if (a.best_trajectory.total_reward != b.best_trajectory.total_reward) return false;
    if (a.best_trajectory.total_log_likelihood != b.best_trajectory.total_log_likelihood) {
        return false;
    }
    if (a.best_reward_curve != b.best_reward_curve) return false;
    if (a.best_trajectory.length() != b.best_trajectory.length()) return false;
    for (int i = 0; i < a.best_trajectory.length(); ++i) {
        if (!(a.best_trajectory.steps[i].action == b.best_trajectory.steps[i].action)) return false;
    }
    return true;
}

void check_curve_nondecreasing(const SolverReport& report) {
    REQUIRE(!report.best_reward_curve.empty());
    double prev = -std::numeric_limits<double>::infinity();
    long prev_iter = 0;
    for (const auto& [iteration, best] : report.best_reward_curve) {
        CHECK(iteration == prev_iter + 1);
        CHECK(best >= prev);
        prev = best;
        prev_iter = iteration;
    }
}

} // namespace

TEST_CASE("exhaustive: a single action gives a single trajectory") {
    ChainParams params;
    params.advances = {0};
    params.probs = {1.0};
    params.horizon = 4;
    ChainSimulator sim(params);
    const SolverReport report = solve_exhaustive(sim, chain_reward());
    CHECK(report.iterations_used == 1);
    CHECK(report.best_trajectory.length() == 4);
    CHECK(report.best_trajectory.horizon_reached);
}

TEST_CASE("exhaustive: two actions over horizon 2 match hand arithmetic") {
    ChainParams params;
    params.advances = {0, 1};
    params.probs = {0.6, 0.4};
    params.failure_position = 1;
    params.horizon = 2;
    ChainSimulator sim(params);
    RewardSpec spec;
    spec.alpha = 50.0;
    const SolverReport report = solve_exhaustive(sim, spec);

    // Distinct trajectories: [advance] (event at step 1, reward 0),
    // [stay, advance] (ln 0.6), [stay, stay] (ln 0.6 - 50).
    CHECK(report.iterations_used == 3);
    CHECK(report.best_trajectory.total_reward == 0.0);
    CHECK(report.best_trajectory.length() == 1);
    CHECK(report.best_trajectory.found_event);
}

TEST_CASE("exhaustive finds the frozen chain optimum") {
    ChainSimulator sim(default_chain());
    const SolverReport report = solve_exhaustive(sim, chain_reward());
    CHECK(report.best_trajectory.total_reward == doctest::Approx(kChainOptimum).epsilon(1e-12));
    CHECK(report.best_trajectory.found_event);
    check_curve_nondecreasing(report);
}

TEST_CASE("exhaustive refuses oversized and non-discrete instances") {
    ChainParams params;
    params.horizon = 20;
    ChainSimulator big(params);
    CHECK_THROWS_AS(solve_exhaustive(big, chain_reward()), std::invalid_argument);

    QuadraticTargetSim continuous(3, 1, {0.0, 0.0, 0.0});
    CHECK_THROWS_AS(solve_exhaustive(continuous, chain_reward()), std::invalid_argument);
}

TEST_CASE("random search: budget one yields one rollout and a length-1 curve") {
    ChainSimulator sim(default_chain());
    const SolverReport report = solve_random(sim, chain_reward(), 1, 7);
    CHECK(report.iterations_used == 1);
    CHECK(report.best_reward_curve.size() == 1);
}

TEST_CASE("random search never beats the exhaustive oracle") {
    ChainSimulator sim(default_chain());
    const double oracle = solve_exhaustive(sim, chain_reward()).best_trajectory.total_reward;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const SolverReport report = solve_random(sim, chain_reward(), 300, seed);
        CHECK(report.best_trajectory.total_reward <= oracle + 1e-12);
        check_curve_nondecreasing(report);
    }
}

TEST_CASE("random search is reproducible from its seed") {
    ChainSimulator sim(default_chain());
    const SolverReport a = solve_random(sim, chain_reward(), 200, 11);
    const SolverReport b = solve_random(sim, chain_reward(), 200, 11);
    CHECK(reports_equal(a, b));
}

TEST_CASE("cem converges to the quadratic toy optimum") {
    const std::vector<double> target = {1.5, -0.5, 2.0, 0.25, -1.0, 0.75};
    QuadraticTargetSim sim(2, 3, target);
    RewardSpec spec;
    spec.beta = 1.0;
    spec.use_terminal_heuristic = true;

    CemConfig cfg;
    cfg.population_size = 60;
    cfg.elite_fraction = 0.2;
    cfg.generations = 50;
    cfg.initial_std = {1.0};
    cfg.rng_seed = 5;
    const SolverReport report = solve_cem(sim, spec, cfg);

    REQUIRE(report.best_trajectory.length() == 2);
    std::vector<double> flat;
    for (const auto& step : report.best_trajectory.steps) {
        const auto& v = step.action.values();
        flat.insert(flat.end(), v.begin(), v.end());
    }
    REQUIRE(flat.size() == target.size());
    for (std::size_t i = 0; i < target.size(); ++i) {
        CHECK(std::abs(flat[i] - target[i]) <= 1e-2);
    }
    check_curve_nondecreasing(report);
}

TEST_CASE("cem degenerates to hill-climb at population one without error") {
    QuadraticTargetSim sim(1, 2, {0.5, 0.5});
    RewardSpec spec;
    spec.beta = 1.0;
    spec.use_terminal_heuristic = true;

    CemConfig cfg;
    cfg.population_size = 1;
    cfg.elite_fraction = 0.99;
    cfg.generations = 10;
    cfg.rng_seed = 1;
    const SolverReport report = solve_cem(sim, spec, cfg);
    CHECK(report.iterations_used == 10);
}

TEST_CASE("cem is reproducible from its seed") {
    QuadraticTargetSim sim(2, 2, {1.0, -1.0, 0.5, 0.0});
    RewardSpec spec;
    spec.beta = 1.0;
    spec.use_terminal_heuristic = true;
    CemConfig cfg;
    cfg.population_size = 20;
    cfg.generations = 15;
    cfg.rng_seed = 123;
    const SolverReport a = solve_cem(sim, spec, cfg);
    const SolverReport b = solve_cem(sim, spec, cfg);
    CHECK(reports_equal(a, b));
}

TEST_CASE("cem requires a continuous-action simulator") {
    auto seeded = ast::sim::SeedWrappedSimulator(
        std::make_unique<ast::sim::ChainProcess>(default_chain()), 5);
    CemConfig cfg;
    CHECK_THROWS_AS(solve_cem(seeded, chain_reward(), cfg), std::invalid_argument);
}

TEST_CASE("cem signals a collapsed sampling distribution when the floor is zero") {
    QuadraticTargetSim sim(1, 1, {0.0});
    RewardSpec spec;
    spec.beta = 1.0;
    spec.use_terminal_heuristic = true;
    CemConfig cfg;
    cfg.population_size = 1; // single elite equals the sample: refit std is 0
    cfg.elite_fraction = 0.5;
    cfg.generations = 5;
    cfg.std_floor = 0.0;
    CHECK_THROWS_AS(solve_cem(sim, spec, cfg), std::runtime_error);
}

TEST_CASE("mcts matches the exhaustive oracle on the frozen chain") {
    ChainSimulator sim(default_chain());
    const double oracle = solve_exhaustive(sim, chain_reward()).best_trajectory.total_reward;

    MctsConfig cfg;
    cfg.max_iterations = 5000;
    cfg.rng_seed = 3;
    const SolverReport report = solve_mcts(sim, chain_reward(), cfg);
    CHECK(report.best_trajectory.total_reward == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(report.best_trajectory.total_reward <= oracle + 1e-12);
    check_curve_nondecreasing(report);
}

TEST_CASE("mcts with a single iteration reports one rollout") {
    ChainSimulator sim(default_chain());
    MctsConfig cfg;
    cfg.max_iterations = 1;
    cfg.rng_seed = 9;
    const SolverReport report = solve_mcts(sim, chain_reward(), cfg);
    CHECK(report.iterations_used == 1);
    CHECK(report.best_reward_curve.size() == 1);
}

TEST_CASE("mcts is reproducible from its seed") {
    ChainSimulator sim(default_chain());
    MctsConfig cfg;
    cfg.max_iterations = 400;
    cfg.rng_seed = 31;
    const SolverReport a = solve_mcts(sim, chain_reward(), cfg);
    const SolverReport b = solve_mcts(sim, chain_reward(), cfg);
    CHECK(reports_equal(a, b));
}

TEST_CASE("mcts finds a cartpole failure within the step budget") {
    ast::sim::CartpoleParams params;
    ast::sim::CartpoleSimulator sim(params);
    RewardSpec spec;
    spec.alpha = 1e4;
    spec.beta = 1e3;
    spec.use_terminal_heuristic = true;

    // Existence witness first: random search with ten times the budget finds
    // failures under the natural disturbance distribution.
    const SolverReport witness = solve_random(sim, spec, 1000000, 1, 500000);
    REQUIRE(witness.first_event_iteration.has_value());

    MctsConfig cfg;
    cfg.exploration_constant = 0.5;
    cfg.max_iterations = 1000000;
    cfg.max_sim_steps = 50000;
    cfg.rng_seed = 1;
    const SolverReport report = solve_mcts(sim, spec, cfg);
    CHECK(report.first_event_iteration.has_value());
    CHECK(report.best_trajectory.found_event);
    CHECK(report.sim_steps_used <= 50000 + params.horizon);
}

TEST_CASE("mcts prunes -infinity trajectories once a finite one is seen") {
    ChainSimulator sim(default_chain());
    RewardSpec spec;
    spec.alpha = std::numeric_limits<double>::infinity();
    MctsConfig cfg;
    cfg.max_iterations = 2000;
    cfg.rng_seed = 17;
    const SolverReport report = solve_mcts(sim, spec, cfg);
    // Failures are reachable, so the best trajectory must be a finite-reward
    // event trajectory, never a -infinity horizon miss.
    CHECK(report.best_trajectory.found_event);
    CHECK(std::isfinite(report.best_trajectory.total_reward));
}

TEST_CASE("solver configs validate their fields") {
    MctsConfig mcts;
    mcts.widening_alpha = 1.0;
    CHECK_THROWS_AS(mcts.validate(), std::invalid_argument);
    mcts.widening_alpha = 0.5;
    mcts.max_iterations = 0;
    CHECK_THROWS_AS(mcts.validate(), std::invalid_argument);

    CemConfig cem;
    cem.elite_fraction = 1.0;
    CHECK_THROWS_AS(cem.validate(), std::invalid_argument);
    cem.elite_fraction = 0.2;
    cem.initial_std = {-1.0};
    CHECK_THROWS_AS(cem.validate(), std::invalid_argument);

    ChainSimulator sim(default_chain());
    CHECK_THROWS_AS(solve_random(sim, chain_reward(), 0, 1), std::invalid_argument);
}
