#include "ast/sim/cartpole.hpp"

#include <cmath>
#include <stdexcept>

#include "ast/util/encoding.hpp"
#include "ast/util/stats.hpp"

namespace ast::sim {

void CartpoleParams::validate() const {
    if (!(cart_mass > 0.0)) throw std::invalid_argument("CartpoleParams: cart_mass must be > 0");
    if (!(pole_mass > 0.0)) throw std::invalid_argument("CartpoleParams: pole_mass must be > 0");
    if (!(pole_half_length > 0.0)) {
        throw std::invalid_argument("CartpoleParams: pole_half_length must be > 0");
    }
    if (!(dt > 0.0)) throw std::invalid_argument("CartpoleParams: dt must be > 0");
    if (!(x_max > 0.0)) throw std::invalid_argument("CartpoleParams: x_max must be > 0");
    if (!(theta_max > 0.0 && theta_max < std::numbers::pi / 2.0)) {
        throw std::invalid_argument("CartpoleParams: theta_max must lie in (0, pi/2)");
    }
    if (!(disturbance_std > 0.0)) {
        throw std::invalid_argument("CartpoleParams: disturbance_std must be > 0");
    }
    if (horizon < 1) throw std::invalid_argument("CartpoleParams: horizon must be >= 1");
}

namespace {

bool finite_state(const CartpoleState& s) {
    return std::isfinite(s.x) && std::isfinite(s.x_dot) && std::isfinite(s.theta) &&
           std::isfinite(s.theta_dot);
}

} // namespace

CartpoleState cartpole_step(const CartpoleState& state, double control_force, double disturbance,
                            const CartpoleParams& params) {
    if (!finite_state(state) || !std::isfinite(control_force) || !std::isfinite(disturbance)) {
        throw std::invalid_argument("cartpole_step: non-finite input");
    }
    const double force = control_force + disturbance;
    const double total_mass = params.cart_mass + params.pole_mass;
    const double pole_ml = params.pole_mass * params.pole_half_length;

    const double sin_theta = std::sin(state.theta);
    const double cos_theta = std::cos(state.theta);
    const double temp = (force + pole_ml * state.theta_dot * state.theta_dot * sin_theta) / total_mass;
    const double theta_acc =
        (params.gravity * sin_theta - cos_theta * temp) /
        (params.pole_half_length * (4.0 / 3.0 - params.pole_mass * cos_theta * cos_theta / total_mass));
    const double x_acc = temp - pole_ml * theta_acc * cos_theta / total_mass;

    CartpoleState next;
    next.x_dot = state.x_dot + x_acc * params.dt;
    next.x = state.x + next.x_dot * params.dt;
    next.theta_dot = state.theta_dot + theta_acc * params.dt;
    next.theta = state.theta + next.theta_dot * params.dt;
    return next;
}

double cartpole_control_force(const CartpoleState& state, const CartpoleParams& params) {
    const auto& k = params.controller_gains;
    return k[0] * state.x + k[1] * state.x_dot + k[2] * state.theta + k[3] * state.theta_dot;
}

bool cartpole_event(const CartpoleState& state, const CartpoleParams& params) {
    return std::abs(state.x) > params.x_max || std::abs(state.theta) > params.theta_max;
}

double cartpole_f(const CartpoleState& state, const CartpoleParams& params) {
    const double ratio =
        std::max(std::abs(state.x) / params.x_max, std::abs(state.theta) / params.theta_max);
    return 1.0 - std::min(1.0, ratio);
}

double cartpole_action_log_likelihood(double disturbance, const CartpoleParams& params) {
    return gaussian_log_pdf(disturbance, 0.0, params.disturbance_std);
}

CartpoleSimulator::CartpoleSimulator(CartpoleParams params) : params_(params) {
    params_.validate();
}

void CartpoleSimulator::initialize() {
    state_ = params_.initial_state;
    t_ = 0;
    terminal_ = cartpole_event(state_, params_);
}

StepOutcome CartpoleSimulator::step(const EnvironmentAction& action) {
    if (terminal_) throw std::logic_error("CartpoleSimulator: step after terminal");
    const double disturbance = require_continuous(action, 1)[0];
    if (!std::isfinite(disturbance)) {
        throw std::invalid_argument("CartpoleSimulator: non-finite disturbance");
    }
    const double control = cartpole_control_force(state_, params_);
    state_ = cartpole_step(state_, control, disturbance, params_);
    ++t_;

    StepOutcome outcome;
    outcome.action_log_likelihood = cartpole_action_log_likelihood(disturbance, params_);
    outcome.event = cartpole_event(state_, params_);
    outcome.terminal = outcome.event || t_ >= params_.horizon;
    outcome.heuristic_metric = cartpole_f(state_, params_);
    terminal_ = outcome.terminal;
    return outcome;
}

bool CartpoleSimulator::is_terminal() const { return terminal_; }

EnvironmentAction CartpoleSimulator::sample_natural_action(std::mt19937_64& rng) const {
    std::normal_distribution<double> dist(0.0, params_.disturbance_std);
    return EnvironmentAction::continuous({dist(rng)});
}

std::string CartpoleSimulator::state_blob() const {
    return format_double(state_.x) + " " + format_double(state_.x_dot) + " " +
           format_double(state_.theta) + " " + format_double(state_.theta_dot);
}

std::unique_ptr<Simulator> CartpoleSimulator::clone() const {
    return std::make_unique<CartpoleSimulator>(*this);
}

} // namespace ast::sim
