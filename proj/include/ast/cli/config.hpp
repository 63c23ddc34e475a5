#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

#include "ast/core/reward.hpp"
#include "ast/core/simulator.hpp"
#include "ast/sim/cartpole.hpp"
#include "ast/sim/chain.hpp"
#include "ast/sim/crosswalk.hpp"
#include "ast/sim/encounter.hpp"
#include "ast/solvers/cem.hpp"
#include "ast/solvers/mcts.hpp"

namespace ast::cli {

// Configuration problems are reported with the offending field's dotted path.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& message) : std::runtime_error(message) {}
};

struct RunConfig {
    std::string scenario; // cartpole | crosswalk | encounter | custom-discrete
    std::variant<sim::CartpoleParams, sim::CrosswalkParams, sim::EncounterParams, sim::ChainParams>
        scenario_params;
    RewardSpec reward;
    std::string solver; // mcts | cem | random | exhaustive
    MctsConfig mcts;
    CemConfig cem;
    long random_rollouts = 1000;
    long exhaustive_max_sequences = 1'000'000;
    long budget = 0; // global simulator-step cap; 0 = unlimited
    std::uint64_t rng_seed = 0;
    std::string output_dir = "runs";

    std::string config_text; // raw file contents, hashed for provenance
    std::string config_hash; // fnv1a64 hex of config_text
};

// Parses and validates a config file. Throws ConfigError naming the field.
RunConfig load_run_config(const std::string& path);

// Same, from in-memory text (path only used in messages).
RunConfig parse_run_config(const std::string& text, const std::string& path = "<memory>");

std::unique_ptr<Simulator> make_simulator(const RunConfig& config);

} // namespace ast::cli
