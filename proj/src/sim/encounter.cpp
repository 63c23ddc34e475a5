#include "ast/sim/encounter.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ast/util/encoding.hpp"

namespace ast::sim {

bool nmac(const EncounterState& state, const NmacParams& params) {
    const auto& aircraft = state.aircraft;
    if (aircraft.size() < 2) throw std::invalid_argument("nmac: needs at least two aircraft");
    for (std::size_t i = 0; i < aircraft.size(); ++i) {
        for (std::size_t j = i + 1; j < aircraft.size(); ++j) {
            const double vertical = std::abs(aircraft[i].altitude - aircraft[j].altitude);
            const double horizontal =
                std::hypot(aircraft[i].x - aircraft[j].x, aircraft[i].y - aircraft[j].y);
            if (vertical < params.vertical_threshold && horizontal < params.horizontal_threshold) {
                return true;
            }
        }
    }
    return false;
}

void EncounterParams::validate() const {
    if (aircraft.size() < 2 || aircraft.size() > 3) {
        throw std::invalid_argument("EncounterParams: aircraft count must be 2 or 3");
    }
    for (const auto& init : aircraft) {
        if (!(init.speed >= 0.0)) throw std::invalid_argument("EncounterParams: speed must be >= 0");
    }
    if (!(dt > 0.0)) throw std::invalid_argument("EncounterParams: dt must be > 0");
    if (horizon < 1) throw std::invalid_argument("EncounterParams: horizon must be >= 1");
    if (!(advisory_lead > 0.0)) {
        throw std::invalid_argument("EncounterParams: advisory_lead must be > 0");
    }
    if (!(advisory_trigger > 0.0)) {
        throw std::invalid_argument("EncounterParams: advisory_trigger must be > 0");
    }
    if (!(commanded_rate > 0.0)) {
        throw std::invalid_argument("EncounterParams: commanded_rate must be > 0");
    }
    if (!(response_probability > 0.0 && response_probability < 1.0)) {
        throw std::invalid_argument("EncounterParams: response_probability must lie in (0,1)");
    }
    if (!(noise_step >= 0.0)) throw std::invalid_argument("EncounterParams: noise_step must be >= 0");
    if (!(nmac_params.vertical_threshold > 0.0 && nmac_params.horizontal_threshold > 0.0)) {
        throw std::invalid_argument("EncounterParams: NMAC thresholds must be > 0");
    }
}

EncounterProcess::EncounterProcess(EncounterParams params) : params_(std::move(params)) {
    params_.validate();
    // Five-point discretized Gaussian on {-2,-1,0,1,2} notches.
    double sum = 0.0;
    for (int k = 0; k < 5; ++k) {
        noise_weights_[k] = std::exp(-0.5 * (k - 2.0) * (k - 2.0));
        sum += noise_weights_[k];
    }
    for (double& w : noise_weights_) w /= sum;
    reset();
}

void EncounterProcess::reset() {
    state_.aircraft.clear();
    for (const auto& init : params_.aircraft) {
        AircraftState ac;
        ac.x = init.x;
        ac.y = init.y;
        ac.altitude = init.altitude;
        const double heading = init.heading_deg * std::numbers::pi / 180.0;
        ac.vx = init.speed * std::cos(heading);
        ac.vy = init.speed * std::sin(heading);
        state_.aircraft.push_back(ac);
    }
    state_.t = 0;
}

void EncounterProcess::issue_advisories() {
    auto& aircraft = state_.aircraft;
    for (std::size_t i = 0; i < aircraft.size(); ++i) {
        for (std::size_t j = i + 1; j < aircraft.size(); ++j) {
            if (aircraft[i].advisory != 0 || aircraft[j].advisory != 0) continue;
            const double dx = aircraft[j].x - aircraft[i].x;
            const double dy = aircraft[j].y - aircraft[i].y;
            const double dvx = aircraft[j].vx - aircraft[i].vx;
            const double dvy = aircraft[j].vy - aircraft[i].vy;
            const double closing = dvx * dvx + dvy * dvy;
            if (closing <= 0.0) continue;
            const double t_cpa = std::max(0.0, -(dx * dvx + dy * dvy) / closing);
            if (t_cpa > params_.advisory_lead) continue;
            const double miss =
                std::hypot(dx + dvx * t_cpa, dy + dvy * t_cpa);
            if (miss < params_.advisory_trigger) {
                // Lower index climbs, higher descends; latched until the end.
                aircraft[i].advisory = 1;
                aircraft[j].advisory = -1;
            }
        }
    }
}

double EncounterProcess::transition(SeedStream& stream) {
    issue_advisories();
    double log_prob = 0.0;
    for (auto& ac : state_.aircraft) {
        if (ac.advisory != 0 && !ac.responding) {
            if (stream.uniform() < params_.response_probability) {
                ac.responding = true;
                ac.mode = ac.advisory > 0 ? PilotMode::climb : PilotMode::descend;
                log_prob += std::log(params_.response_probability);
            } else {
                log_prob += std::log(1.0 - params_.response_probability);
            }
        }
        const double commanded =
            ac.responding ? static_cast<double>(ac.advisory) * params_.commanded_rate : 0.0;
        double notch_prob = 0.0;
        const int notch = stream.sample_discrete(noise_weights_, notch_prob);
        log_prob += std::log(notch_prob);
        ac.vertical_rate = commanded + (notch - 2) * params_.noise_step;

        ac.x += ac.vx * params_.dt;
        ac.y += ac.vy * params_.dt;
        ac.altitude += ac.vertical_rate * params_.dt;
    }
    ++state_.t;
    return log_prob;
}

bool EncounterProcess::event() const { return nmac(state_, params_.nmac_params); }

std::string EncounterProcess::state_blob() const {
    std::string blob = std::to_string(state_.t);
    for (const auto& ac : state_.aircraft) {
        blob += " " + format_double(ac.x) + " " + format_double(ac.y) + " " +
                format_double(ac.altitude) + " " + format_double(ac.vertical_rate) + " " +
                std::to_string(ac.advisory) + " " + (ac.responding ? "1" : "0");
    }
    return blob;
}

std::unique_ptr<StochasticProcess> EncounterProcess::clone() const {
    return std::make_unique<EncounterProcess>(*this);
}

std::unique_ptr<SeedWrappedSimulator> make_encounter_simulator(EncounterParams params) {
    const int horizon = params.horizon;
    return std::make_unique<SeedWrappedSimulator>(std::make_unique<EncounterProcess>(std::move(params)),
                                                  horizon);
}

} // namespace ast::sim
