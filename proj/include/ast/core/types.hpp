#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace ast {

// How a simulator wants to be driven: a real-valued disturbance vector per
// step, or a raw RNG seed token per step.
enum class ActionMode { continuous, seed };

// The solver's control input to the simulator.
struct EnvironmentAction {
    std::variant<std::vector<double>, std::uint64_t> payload;

    static EnvironmentAction continuous(std::vector<double> values) {
        return EnvironmentAction{std::move(values)};
    }
    static EnvironmentAction seed(std::uint64_t token) {
        return EnvironmentAction{token};
    }

    bool is_seed() const { return std::holds_alternative<std::uint64_t>(payload); }

    const std::vector<double>& values() const {
        if (is_seed()) throw std::logic_error("EnvironmentAction: seed payload has no values");
        return std::get<std::vector<double>>(payload);
    }
    std::uint64_t seed_value() const {
        if (!is_seed()) throw std::logic_error("EnvironmentAction: continuous payload has no seed");
        return std::get<std::uint64_t>(payload);
    }

    bool operator==(const EnvironmentAction& other) const = default;
};

// Per-step simulator return.
//
// action_log_likelihood is the log-probability (nats) of the accepted action
// (or, in seed mode, of the realized transition). heuristic_metric is the
// scenario's optional state heuristic evaluated after the step; the rollout
// engine feeds it to the reward as h(s) mid-trajectory and as f(s) at a
// horizon-reached terminal. action_penalty, when set, replaces the default
// action cost -log P(a) with a scenario-supplied distance g(a).
struct StepOutcome {
    double action_log_likelihood = 0.0;
    bool event = false;
    bool terminal = false;
    std::optional<double> heuristic_metric;
    std::optional<double> action_penalty;
};

} // namespace ast
