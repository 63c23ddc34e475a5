#pragma once

#include <Eigen/Dense>

#include "ast/core/simulator.hpp"

namespace ast::sim {

// Frame: the crosswalk centerline is x = 0 and the vehicle lane centerline is
// y = 0. The vehicle drives East (+x); the pedestrian crosses South to North
// (+y).
struct CrosswalkState {
    double vehicle_x = 0.0;     // m, vehicle center
    double vehicle_y = 0.0;     // m, fixed lane centerline
    double vehicle_speed = 0.0; // m/s, >= 0, along +x
    double ped_x = 0.0;         // m
    double ped_y = 0.0;         // m
    double ped_vx = 0.0;        // m/s
    double ped_vy = 0.0;        // m/s
    int t = 0;
};

// 6-dimensional environment action: pedestrian acceleration plus additive
// sensor noise on the observed pedestrian position and velocity.
struct CrosswalkAction {
    double ped_accel_x = 0.0;  // m/s^2
    double ped_accel_y = 0.0;  // m/s^2
    double noise_pos_x = 0.0;  // m
    double noise_pos_y = 0.0;  // m
    double noise_vel_x = 0.0;  // m/s
    double noise_vel_y = 0.0;  // m/s

    static constexpr int dimension = 6;
    static CrosswalkAction from_vector(const std::vector<double>& values);
    Eigen::Matrix<double, 6, 1> to_vector() const;
};

struct IdmParams {
    double desired_speed = 11.2;     // m/s
    double min_gap = 4.0;            // m
    double time_headway = 1.0;       // s
    double max_accel = 2.0;          // m/s^2
    double comfortable_decel = 2.5;  // m/s^2
    double accel_exponent = 4.0;

    void validate() const;
};

// Natural action distribution: N(mean, covariance) over the 6-vector.
// covariance must be symmetric positive-definite.
struct ActionModel {
    Eigen::VectorXd mean;
    Eigen::MatrixXd covariance;
};

// sqrt((a - mean)^T covariance^-1 (a - mean)); throws std::invalid_argument
// when the covariance cannot be Cholesky-factorized.
double mahalanobis(const Eigen::VectorXd& a, const ActionModel& model);

// Log density of the model at a, in nats.
double action_model_log_pdf(const Eigen::VectorXd& a, const ActionModel& model);

// Standard IDM acceleration, clamped to [-2*comfortable_decel, max_accel].
double idm_accel(double gap, double own_speed, double closing_speed, const IdmParams& params);

struct CrosswalkParams {
    IdmParams idm;
    double vehicle_length = 4.7;    // m
    double vehicle_width = 2.0;     // m
    double pedestrian_size = 0.6;   // m, square bounding box edge
    double road_half_width = 1.5;   // m, |y| below this counts as on the road
    double dt = 0.1;                // s
    int horizon = 50;
    double accel_std = 1.5;         // m/s^2 per axis
    double pos_noise_std = 0.1;     // m per axis
    double vel_noise_std = 0.1;     // m/s per axis
    double vehicle_start_x = -35.0; // m
    double vehicle_start_speed = 11.2; // m/s
    double ped_start_x = 0.0;       // m
    double ped_start_y = -2.0;      // m
    double ped_start_vx = 0.0;      // m/s
    double ped_start_vy = 1.0;      // m/s

    void validate() const;
    ActionModel natural_action_model() const;
};

struct CrosswalkStepResult {
    CrosswalkState next;
    bool collision = false;
};

// Advances pedestrian and vehicle one step. The vehicle observes the
// pedestrian through the additive noise in the action, projects an on-road
// observation onto its lane as the IDM lead obstacle, and otherwise
// free-flows. Collision = axis-aligned bounding boxes overlap.
CrosswalkStepResult crosswalk_step(const CrosswalkState& state, const CrosswalkAction& action,
                                   const CrosswalkParams& params);

// Center-to-center distance between vehicle and pedestrian.
double crosswalk_f(const CrosswalkState& state);

class CrosswalkSimulator : public Simulator {
public:
    explicit CrosswalkSimulator(CrosswalkParams params);

    void initialize() override;
    StepOutcome step(const EnvironmentAction& action) override;
    bool is_terminal() const override;

    ActionMode action_mode() const override { return ActionMode::continuous; }
    int action_dimension() const override { return CrosswalkAction::dimension; }
    int horizon() const override { return params_.horizon; }

    EnvironmentAction sample_natural_action(std::mt19937_64& rng) const override;
    std::string state_blob() const override;
    std::unique_ptr<Simulator> clone() const override;

    const CrosswalkState& state() const { return state_; }
    const CrosswalkParams& params() const { return params_; }

private:
    CrosswalkParams params_;
    ActionModel model_;
    CrosswalkState state_{};
    bool terminal_ = true;
};

} // namespace ast::sim
