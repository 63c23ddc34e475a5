#include "ast/sim/crosswalk.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ast/util/encoding.hpp"

namespace ast::sim {

namespace {

constexpr double kFreeRoadGap = 1e9; // m, stands in for "no obstacle"

} // namespace

CrosswalkAction CrosswalkAction::from_vector(const std::vector<double>& values) {
    if (values.size() != dimension) {
        throw std::invalid_argument("CrosswalkAction: expected 6 components");
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("CrosswalkAction: non-finite component");
    }
    return CrosswalkAction{values[0], values[1], values[2], values[3], values[4], values[5]};
}

Eigen::Matrix<double, 6, 1> CrosswalkAction::to_vector() const {
    Eigen::Matrix<double, 6, 1> v;
    v << ped_accel_x, ped_accel_y, noise_pos_x, noise_pos_y, noise_vel_x, noise_vel_y;
    return v;
}

void IdmParams::validate() const {
    if (!(desired_speed > 0.0)) throw std::invalid_argument("IdmParams: desired_speed must be > 0");
    if (!(min_gap > 0.0)) throw std::invalid_argument("IdmParams: min_gap must be > 0");
    if (!(time_headway > 0.0)) throw std::invalid_argument("IdmParams: time_headway must be > 0");
    if (!(max_accel > 0.0)) throw std::invalid_argument("IdmParams: max_accel must be > 0");
    if (!(comfortable_decel > 0.0)) {
        throw std::invalid_argument("IdmParams: comfortable_decel must be > 0");
    }
    if (!(accel_exponent > 0.0)) {
        throw std::invalid_argument("IdmParams: accel_exponent must be > 0");
    }
}

double idm_accel(double gap, double own_speed, double closing_speed, const IdmParams& params) {
    if (!(gap > 0.0)) throw std::invalid_argument("idm_accel: gap must be > 0");
    const double desired_gap =
        params.min_gap + own_speed * params.time_headway +
        own_speed * closing_speed / (2.0 * std::sqrt(params.max_accel * params.comfortable_decel));
    const double ratio = desired_gap / gap;
    const double accel = params.max_accel *
                         (1.0 - std::pow(own_speed / params.desired_speed, params.accel_exponent) -
                          ratio * ratio);
    return std::clamp(accel, -2.0 * params.comfortable_decel, params.max_accel);
}

double mahalanobis(const Eigen::VectorXd& a, const ActionModel& model) {
    if (a.size() != model.mean.size() || model.covariance.rows() != model.mean.size() ||
        model.covariance.cols() != model.mean.size()) {
        throw std::invalid_argument("mahalanobis: dimension mismatch");
    }
    Eigen::LLT<Eigen::MatrixXd> llt(model.covariance);
    if (llt.info() != Eigen::Success) {
        throw std::invalid_argument("mahalanobis: covariance is not positive-definite");
    }
    const Eigen::VectorXd diff = a - model.mean;
    // Solve L z = diff; then |z|^2 = diff^T Sigma^-1 diff.
    const Eigen::VectorXd z = llt.matrixL().solve(diff);
    return z.norm();
}

double action_model_log_pdf(const Eigen::VectorXd& a, const ActionModel& model) {
    Eigen::LLT<Eigen::MatrixXd> llt(model.covariance);
    if (llt.info() != Eigen::Success) {
        throw std::invalid_argument("action_model_log_pdf: covariance is not positive-definite");
    }
    const Eigen::VectorXd diff = a - model.mean;
    const Eigen::VectorXd z = llt.matrixL().solve(diff);
    double log_det = 0.0;
    const auto& L = llt.matrixLLT();
    for (Eigen::Index i = 0; i < L.rows(); ++i) log_det += 2.0 * std::log(L(i, i));
    const double k = static_cast<double>(model.mean.size());
    return -0.5 * (k * std::log(2.0 * std::numbers::pi) + log_det + z.squaredNorm());
}

void CrosswalkParams::validate() const {
    idm.validate();
    if (!(vehicle_length > 0.0) || !(vehicle_width > 0.0) || !(pedestrian_size > 0.0)) {
        throw std::invalid_argument("CrosswalkParams: geometry extents must be > 0");
    }
    if (!(road_half_width > 0.0)) {
        throw std::invalid_argument("CrosswalkParams: road_half_width must be > 0");
    }
    if (!(dt > 0.0)) throw std::invalid_argument("CrosswalkParams: dt must be > 0");
    if (horizon < 1) throw std::invalid_argument("CrosswalkParams: horizon must be >= 1");
    if (!(accel_std > 0.0) || !(pos_noise_std > 0.0) || !(vel_noise_std > 0.0)) {
        throw std::invalid_argument("CrosswalkParams: action stds must be > 0");
    }
    if (!(vehicle_start_speed >= 0.0)) {
        throw std::invalid_argument("CrosswalkParams: vehicle_start_speed must be >= 0");
    }
}

ActionModel CrosswalkParams::natural_action_model() const {
    ActionModel model;
    model.mean = Eigen::VectorXd::Zero(CrosswalkAction::dimension);
    Eigen::VectorXd variances(CrosswalkAction::dimension);
    variances << accel_std * accel_std, accel_std * accel_std, pos_noise_std * pos_noise_std,
        pos_noise_std * pos_noise_std, vel_noise_std * vel_noise_std, vel_noise_std * vel_noise_std;
    model.covariance = variances.asDiagonal();
    return model;
}

CrosswalkStepResult crosswalk_step(const CrosswalkState& state, const CrosswalkAction& action,
                                   const CrosswalkParams& params) {
    CrosswalkState next = state;

    // Pedestrian: semi-implicit Euler under the commanded acceleration.
    next.ped_vx = state.ped_vx + action.ped_accel_x * params.dt;
    next.ped_vy = state.ped_vy + action.ped_accel_y * params.dt;
    next.ped_x = state.ped_x + next.ped_vx * params.dt;
    next.ped_y = state.ped_y + next.ped_vy * params.dt;

    // Vehicle: the SUT sees the pedestrian through additive sensor noise and
    // treats an on-road observation ahead of its front bumper as the IDM lead
    // obstacle projected onto the lane.
    const double observed_x = next.ped_x + action.noise_pos_x;
    const double observed_y = next.ped_y + action.noise_pos_y;
    const double observed_vx = next.ped_vx + action.noise_vel_x;
    const double front = state.vehicle_x + params.vehicle_length / 2.0;

    double gap = kFreeRoadGap;
    double closing_speed = 0.0;
    if (std::abs(observed_y) < params.road_half_width && observed_x > front) {
        gap = observed_x - front;
        closing_speed = state.vehicle_speed - observed_vx;
    }
    const double accel = idm_accel(gap, state.vehicle_speed, closing_speed, params.idm);
    next.vehicle_speed = std::max(0.0, state.vehicle_speed + accel * params.dt);
    next.vehicle_x = state.vehicle_x + next.vehicle_speed * params.dt;
    next.t = state.t + 1;

    const bool collision =
        std::abs(next.ped_x - next.vehicle_x) <
            (params.vehicle_length + params.pedestrian_size) / 2.0 &&
        std::abs(next.ped_y - next.vehicle_y) <
            (params.vehicle_width + params.pedestrian_size) / 2.0;
    return CrosswalkStepResult{next, collision};
}

double crosswalk_f(const CrosswalkState& state) {
    return std::hypot(state.vehicle_x - state.ped_x, state.vehicle_y - state.ped_y);
}

CrosswalkSimulator::CrosswalkSimulator(CrosswalkParams params)
    : params_(params), model_(params.natural_action_model()) {
    params_.validate();
}

void CrosswalkSimulator::initialize() {
    state_ = CrosswalkState{};
    state_.vehicle_x = params_.vehicle_start_x;
    state_.vehicle_y = 0.0;
    state_.vehicle_speed = params_.vehicle_start_speed;
    state_.ped_x = params_.ped_start_x;
    state_.ped_y = params_.ped_start_y;
    state_.ped_vx = params_.ped_start_vx;
    state_.ped_vy = params_.ped_start_vy;
    state_.t = 0;
    terminal_ = false;
}

StepOutcome CrosswalkSimulator::step(const EnvironmentAction& action) {
    if (terminal_) throw std::logic_error("CrosswalkSimulator: step after terminal");
    const CrosswalkAction parsed =
        CrosswalkAction::from_vector(require_continuous(action, CrosswalkAction::dimension));
    const Eigen::Matrix<double, 6, 1> vec = parsed.to_vector();

    const CrosswalkStepResult result = crosswalk_step(state_, parsed, params_);
    state_ = result.next;

    StepOutcome outcome;
    outcome.action_log_likelihood = action_model_log_pdf(vec, model_);
    outcome.action_penalty = mahalanobis(vec, model_);
    outcome.event = result.collision;
    outcome.terminal = outcome.event || state_.t >= params_.horizon;
    outcome.heuristic_metric = crosswalk_f(state_);
    terminal_ = outcome.terminal;
    return outcome;
}

bool CrosswalkSimulator::is_terminal() const { return terminal_; }

EnvironmentAction CrosswalkSimulator::sample_natural_action(std::mt19937_64& rng) const {
    std::normal_distribution<double> unit(0.0, 1.0);
    std::vector<double> values(CrosswalkAction::dimension);
    const double stds[6] = {params_.accel_std,     params_.accel_std,    params_.pos_noise_std,
                            params_.pos_noise_std, params_.vel_noise_std, params_.vel_noise_std};
    for (int i = 0; i < CrosswalkAction::dimension; ++i) values[i] = stds[i] * unit(rng);
    return EnvironmentAction::continuous(std::move(values));
}

std::string CrosswalkSimulator::state_blob() const {
    return format_double(state_.vehicle_x) + " " + format_double(state_.vehicle_y) + " " +
           format_double(state_.vehicle_speed) + " " + format_double(state_.ped_x) + " " +
           format_double(state_.ped_y) + " " + format_double(state_.ped_vx) + " " +
           format_double(state_.ped_vy) + " " + std::to_string(state_.t);
}

std::unique_ptr<Simulator> CrosswalkSimulator::clone() const {
    return std::make_unique<CrosswalkSimulator>(*this);
}

} // namespace ast::sim
