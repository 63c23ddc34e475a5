#include "ast/sim/seed_protocol.hpp"

#include <stdexcept>

namespace ast::sim {

int SeedStream::sample_discrete(std::span<const double> probs, double& prob_out) {
    if (probs.empty()) throw std::invalid_argument("sample_discrete: empty distribution");
    const double u = uniform();
    double cum = 0.0;
    for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
        cum += probs[i];
        if (u < cum) {
            prob_out = probs[i];
            return static_cast<int>(i);
        }
    }
    prob_out = probs.back();
    return static_cast<int>(probs.size()) - 1;
}

SeedWrappedSimulator::SeedWrappedSimulator(std::unique_ptr<StochasticProcess> inner, int horizon)
    : inner_(std::move(inner)), horizon_(horizon) {
    if (!inner_) throw std::invalid_argument("SeedWrappedSimulator: null inner process");
    if (horizon_ < 1) throw std::invalid_argument("SeedWrappedSimulator: horizon must be >= 1");
}

void SeedWrappedSimulator::initialize() {
    inner_->reset();
    t_ = 0;
    terminal_ = inner_->event();
}

StepOutcome SeedWrappedSimulator::step(const EnvironmentAction& action) {
    if (terminal_) throw std::logic_error("SeedWrappedSimulator: step after terminal");
    SeedStream stream(require_seed(action));
    StepOutcome outcome;
    outcome.action_log_likelihood = inner_->transition(stream);
    ++t_;
    outcome.event = inner_->event();
    outcome.terminal = outcome.event || t_ >= horizon_;
    terminal_ = outcome.terminal;
    return outcome;
}

bool SeedWrappedSimulator::is_terminal() const { return terminal_; }

EnvironmentAction SeedWrappedSimulator::sample_natural_action(std::mt19937_64& rng) const {
    return EnvironmentAction::seed(rng());
}

std::string SeedWrappedSimulator::state_blob() const { return inner_->state_blob(); }

std::unique_ptr<Simulator> SeedWrappedSimulator::clone() const {
    auto copy = std::make_unique<SeedWrappedSimulator>(inner_->clone(), horizon_);
    copy->t_ = t_;
    copy->terminal_ = terminal_;
    return copy;
}

} // namespace ast::sim
