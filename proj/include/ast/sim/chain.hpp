#pragma once

#include <vector>

#include "ast/core/simulator.hpp"
#include "ast/sim/seed_protocol.hpp"

namespace ast::sim {

// Small position-walk MDP with a published transition table. Action i moves
// the walker by advances[i]; its naturalness is probs[i]. The event fires
// when the position reaches failure_position. Exists in two exposures: a
// discrete-action simulator (the solver picks the transition) and a
// seed-driven stochastic process (the table is sampled).
struct ChainParams {
    std::vector<int> advances = {0, 1, 2};
    std::vector<double> probs = {0.7, 0.2, 0.1};
    int start_position = 0;
    int failure_position = 5;
    int horizon = 5;

    void validate() const;
};

class ChainSimulator : public Simulator {
public:
    explicit ChainSimulator(ChainParams params);

    void initialize() override;
    StepOutcome step(const EnvironmentAction& action) override;
    bool is_terminal() const override;

    ActionMode action_mode() const override { return ActionMode::continuous; }
    int action_dimension() const override { return 1; }
    int horizon() const override { return params_.horizon; }

    EnvironmentAction sample_natural_action(std::mt19937_64& rng) const override;
    std::vector<EnvironmentAction> discrete_actions() const override;
    std::string state_blob() const override;
    std::unique_ptr<Simulator> clone() const override;

    int position() const { return position_; }

private:
    ChainParams params_;
    int position_ = 0;
    int t_ = 0;
    bool terminal_ = true;
};

class ChainProcess : public StochasticProcess {
public:
    explicit ChainProcess(ChainParams params);

    void reset() override;
    double transition(SeedStream& stream) override;
    bool event() const override;
    std::string state_blob() const override;
    std::unique_ptr<StochasticProcess> clone() const override;

    int position() const { return position_; }
    const ChainParams& params() const { return params_; }

private:
    ChainParams params_;
    int position_ = 0;
};

} // namespace ast::sim
