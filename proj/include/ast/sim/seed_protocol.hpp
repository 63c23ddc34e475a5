#pragma once

#include <memory>
#include <span>
#include <string>

#include "ast/core/simulator.hpp"
#include "ast/util/rng.hpp"

namespace ast::sim {

// All randomness of one simulator step, derived from a single 64-bit seed
// token through a splitmix64 stream. Identical seeds give identical draws.
class SeedStream {
public:
    explicit SeedStream(std::uint64_t seed) : state_(seed) {}

    double uniform() { return uniform_unit(state_); }

    // Inverse-CDF draw from a discrete distribution. prob_out receives the
    // exact table probability of the sampled index.
    int sample_discrete(std::span<const double> probs, double& prob_out);

private:
    std::uint64_t state_;
};

// A stochastic inner model driven purely through per-step seeds. transition()
// advances the model one step, drawing every random outcome from the stream,
// and returns the exact log-probability of the realized outcomes.
class StochasticProcess {
public:
    virtual ~StochasticProcess() = default;

    virtual void reset() = 0;
    virtual double transition(SeedStream& stream) = 0;
    virtual bool event() const = 0;
    virtual std::string state_blob() const = 0;
    virtual std::unique_ptr<StochasticProcess> clone() const = 0;
};

// Adapts a StochasticProcess to the solver contract: environment actions are
// seed tokens, one per step, and the reported action log-likelihood is the
// inner model's transition log-probability.
class SeedWrappedSimulator : public Simulator {
public:
    SeedWrappedSimulator(std::unique_ptr<StochasticProcess> inner, int horizon);

    void initialize() override;
    StepOutcome step(const EnvironmentAction& action) override;
    bool is_terminal() const override;

    ActionMode action_mode() const override { return ActionMode::seed; }
    int action_dimension() const override { return 0; }
    int horizon() const override { return horizon_; }

    EnvironmentAction sample_natural_action(std::mt19937_64& rng) const override;
    std::string state_blob() const override;
    std::unique_ptr<Simulator> clone() const override;

    const StochasticProcess& inner() const { return *inner_; }

private:
    std::unique_ptr<StochasticProcess> inner_;
    int horizon_;
    int t_ = 0;
    bool terminal_ = true;
};

} // namespace ast::sim
