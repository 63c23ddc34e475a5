#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "ast/core/types.hpp"

namespace ast {

// Black-box scenario contract. A simulator owns its initial state and the
// system under test; the engine only drives it with environment actions and
// reads back StepOutcome records plus opaque state snapshots.
//
// Contract:
//   - initialize() resets to the configured initial state; is_terminal() is
//     false afterwards unless the initial state already lies in the event set.
//   - step() after a terminal state throws std::logic_error.
//   - A continuous-mode simulator rejects seed payloads and vectors whose
//     length differs from action_dimension(); a seed-mode simulator rejects
//     continuous payloads.
//   - Instances are not shared across threads; clone() gives an independent
//     copy for parallel rollouts.
class Simulator {
public:
    virtual ~Simulator() = default;

    virtual void initialize() = 0;
    virtual StepOutcome step(const EnvironmentAction& action) = 0;
    virtual bool is_terminal() const = 0;

    virtual ActionMode action_mode() const = 0;
    virtual int action_dimension() const = 0;
    virtual int horizon() const = 0;

    // Draws one action from the scenario's natural action distribution at the
    // current state. Solvers use this both for default rollouts and as the
    // proposal distribution when widening.
    virtual EnvironmentAction sample_natural_action(std::mt19937_64& rng) const = 0;

    // Non-empty iff the scenario exposes a finite action set (enables the
    // exhaustive oracle).
    virtual std::vector<EnvironmentAction> discrete_actions() const { return {}; }

    // Opaque serialized snapshot of the current state.
    virtual std::string state_blob() const = 0;

    virtual std::unique_ptr<Simulator> clone() const = 0;
};

// Validation helpers shared by the simulator implementations.
const std::vector<double>& require_continuous(const EnvironmentAction& action, int dimension);
std::uint64_t require_seed(const EnvironmentAction& action);

} // namespace ast
