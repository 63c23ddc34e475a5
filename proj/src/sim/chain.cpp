#include "ast/sim/chain.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ast::sim {

void ChainParams::validate() const {
    if (advances.empty() || advances.size() != probs.size()) {
        throw std::invalid_argument("ChainParams: advances/probs must be non-empty and same size");
    }
    double sum = 0.0;
    for (double p : probs) {
        if (!(p > 0.0)) throw std::invalid_argument("ChainParams: probs entries must be > 0");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("ChainParams: probs must sum to 1");
    }
    if (horizon < 1) throw std::invalid_argument("ChainParams: horizon must be >= 1");
    if (start_position >= failure_position) {
        throw std::invalid_argument("ChainParams: start_position must lie below failure_position");
    }
}

namespace {

int action_index(const EnvironmentAction& action, std::size_t n_actions) {
    const auto& values = require_continuous(action, 1);
    const double raw = values[0];
    const int idx = static_cast<int>(std::lround(raw));
    if (std::abs(raw - idx) > 1e-9 || idx < 0 || idx >= static_cast<int>(n_actions)) {
        throw std::invalid_argument("ChainSimulator: action must be an integral index into the table");
    }
    return idx;
}

} // namespace

ChainSimulator::ChainSimulator(ChainParams params) : params_(std::move(params)) {
    params_.validate();
}

void ChainSimulator::initialize() {
    position_ = params_.start_position;
    t_ = 0;
    terminal_ = false;
}

StepOutcome ChainSimulator::step(const EnvironmentAction& action) {
    if (terminal_) throw std::logic_error("ChainSimulator: step after terminal");
    const int idx = action_index(action, params_.advances.size());
    position_ += params_.advances[idx];
    ++t_;
    StepOutcome outcome;
    outcome.action_log_likelihood = std::log(params_.probs[idx]);
    outcome.event = position_ >= params_.failure_position;
    outcome.terminal = outcome.event || t_ >= params_.horizon;
    terminal_ = outcome.terminal;
    return outcome;
}

bool ChainSimulator::is_terminal() const { return terminal_; }

EnvironmentAction ChainSimulator::sample_natural_action(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double u = unit(rng);
    double cum = 0.0;
    for (std::size_t i = 0; i + 1 < params_.probs.size(); ++i) {
        cum += params_.probs[i];
        if (u < cum) return EnvironmentAction::continuous({static_cast<double>(i)});
    }
    return EnvironmentAction::continuous({static_cast<double>(params_.probs.size() - 1)});
}

std::vector<EnvironmentAction> ChainSimulator::discrete_actions() const {
    std::vector<EnvironmentAction> actions;
    actions.reserve(params_.advances.size());
    for (std::size_t i = 0; i < params_.advances.size(); ++i) {
        actions.push_back(EnvironmentAction::continuous({static_cast<double>(i)}));
    }
    return actions;
}

std::string ChainSimulator::state_blob() const {
    return std::to_string(position_) + " " + std::to_string(t_);
}

std::unique_ptr<Simulator> ChainSimulator::clone() const {
    return std::make_unique<ChainSimulator>(*this);
}

ChainProcess::ChainProcess(ChainParams params) : params_(std::move(params)) {
    params_.validate();
    position_ = params_.start_position;
}

void ChainProcess::reset() { position_ = params_.start_position; }

double ChainProcess::transition(SeedStream& stream) {
    double prob = 0.0;
    const int idx = stream.sample_discrete(params_.probs, prob);
    position_ += params_.advances[idx];
    return std::log(prob);
}

bool ChainProcess::event() const { return position_ >= params_.failure_position; }

std::string ChainProcess::state_blob() const { return std::to_string(position_); }

std::unique_ptr<StochasticProcess> ChainProcess::clone() const {
    return std::make_unique<ChainProcess>(*this);
}

} // namespace ast::sim
