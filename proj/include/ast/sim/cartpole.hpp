#pragma once

#include <array>
#include <numbers>

#include "ast/core/simulator.hpp"

namespace ast::sim {

struct CartpoleState {
    double x = 0.0;          // m
    double x_dot = 0.0;      // m/s
    double theta = 0.0;      // rad, 0 = upright
    double theta_dot = 0.0;  // rad/s
};

// Classic benchmark constants plus the pieces this scenario adds: a linear
// state-feedback balancing controller as the system under test and a
// zero-mean Gaussian natural distribution for the disturbance force.
struct CartpoleParams {
    double cart_mass = 1.0;        // kg
    double pole_mass = 0.1;        // kg
    double pole_half_length = 0.5; // m
    double gravity = 9.8;          // m/s^2
    double dt = 0.02;              // s
    double x_max = 2.4;            // m
    double theta_max = 12.0 * std::numbers::pi / 180.0; // rad
    // Control force = gains . [x, x_dot, theta, theta_dot]; the defaults
    // stabilize the upright equilibrium for the constants above.
    std::array<double, 4> controller_gains = {1.4, 3.0, 35.0, 9.0};
    double disturbance_std = 10.0; // N
    int horizon = 100;
    CartpoleState initial_state{};

    void validate() const;
};

// One semi-implicit Euler step of the cartpole equations of motion with total
// horizontal force control_force + disturbance. Throws on non-finite inputs.
CartpoleState cartpole_step(const CartpoleState& state, double control_force, double disturbance,
                            const CartpoleParams& params);

double cartpole_control_force(const CartpoleState& state, const CartpoleParams& params);

// Failure set: |x| > x_max or |theta| > theta_max (strict).
bool cartpole_event(const CartpoleState& state, const CartpoleParams& params);

// Normalized distance to failure: 1 at the origin, 0 at the boundary.
double cartpole_f(const CartpoleState& state, const CartpoleParams& params);

// Log density of the natural disturbance distribution at this disturbance.
double cartpole_action_log_likelihood(double disturbance, const CartpoleParams& params);

class CartpoleSimulator : public Simulator {
public:
    explicit CartpoleSimulator(CartpoleParams params);

    void initialize() override;
    StepOutcome step(const EnvironmentAction& action) override;
    bool is_terminal() const override;

    ActionMode action_mode() const override { return ActionMode::continuous; }
    int action_dimension() const override { return 1; }
    int horizon() const override { return params_.horizon; }

    EnvironmentAction sample_natural_action(std::mt19937_64& rng) const override;
    std::string state_blob() const override;
    std::unique_ptr<Simulator> clone() const override;

    const CartpoleState& state() const { return state_; }
    const CartpoleParams& params() const { return params_; }

private:
    CartpoleParams params_;
    CartpoleState state_{};
    int t_ = 0;
    bool terminal_ = true;
};

} // namespace ast::sim
