#include "ast/core/reward.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ast {

void RewardSpec::validate() const {
    if (std::isnan(alpha) || alpha < 0.0) {
        throw std::invalid_argument("RewardSpec: alpha must be >= 0 (may be +infinity)");
    }
    if (!std::isfinite(beta) || beta < 0.0) {
        throw std::invalid_argument("RewardSpec: beta must be finite and >= 0");
    }
    if (!std::isfinite(eta) || eta < 0.0) {
        throw std::invalid_argument("RewardSpec: eta must be finite and >= 0");
    }
}

double reward_step(const RewardSpec& spec, const StepOutcome& outcome, int t, int horizon,
                   std::optional<double> f_value, std::optional<double> h_value) {
    if (t > horizon) {
        throw std::invalid_argument("reward_step: step index exceeds horizon");
    }
    if (outcome.event) {
        return 0.0;
    }
    if (outcome.terminal) {
        if (std::isinf(spec.alpha)) {
            return -std::numeric_limits<double>::infinity();
        }
        double penalty = spec.alpha;
        if (spec.use_terminal_heuristic) {
            if (!f_value) {
                throw std::invalid_argument("reward_step: terminal heuristic enabled but f(s) missing");
            }
            penalty += spec.beta * *f_value;
        }
        return -penalty;
    }
    const double g = outcome.action_penalty ? *outcome.action_penalty : -outcome.action_log_likelihood;
    double reward = -g;
    if (spec.use_step_heuristic) {
        if (!h_value) {
            throw std::invalid_argument("reward_step: step heuristic enabled but h(s) missing");
        }
        reward -= spec.eta * *h_value;
    }
    return reward;
}

double reward_step_outcome(const RewardSpec& spec, const StepOutcome& outcome, int t, int horizon) {
    std::optional<double> f_value;
    std::optional<double> h_value;
    if (outcome.terminal && !outcome.event) {
        f_value = outcome.heuristic_metric;
    } else if (!outcome.terminal) {
        h_value = outcome.heuristic_metric;
    }
    return reward_step(spec, outcome, t, horizon, f_value, h_value);
}

} // namespace ast
