#pragma once

#include <array>
#include <memory>
#include <vector>

#include "ast/sim/seed_protocol.hpp"

namespace ast::sim {

enum class PilotMode { level, climb, descend };

struct AircraftState {
    double x = 0.0;             // ft
    double y = 0.0;             // ft
    double altitude = 0.0;      // ft
    double vx = 0.0;            // ft/s
    double vy = 0.0;            // ft/s
    double vertical_rate = 0.0; // ft/s
    PilotMode mode = PilotMode::level;
    int advisory = 0;           // -1 descend, 0 none, +1 climb
    bool responding = false;
};

struct EncounterState {
    std::vector<AircraftState> aircraft;
    int t = 0;
};

// Near mid-air collision thresholds. The values are definitional; the config
// layer refuses to change them without an explicit override flag.
struct NmacParams {
    double vertical_threshold = 100.0;   // ft
    double horizontal_threshold = 500.0; // ft
};

// True iff any pair of aircraft is simultaneously within both thresholds
// (strict inequalities). Throws std::invalid_argument with fewer than two
// aircraft.
bool nmac(const EncounterState& state, const NmacParams& params);

struct AircraftInit {
    double x = 0.0;
    double y = 0.0;
    double altitude = 0.0;
    double speed = 0.0;       // ft/s, >= 0
    double heading_deg = 0.0; // 0 = +x, counterclockwise
};

// Toy stand-in for a full collision-avoidance stack: straight-line flight, a
// projected-miss-distance advisory trigger with latched advisories, pilots
// that respond after a geometric delay, and discretized Gaussian vertical-
// rate noise. Every random outcome has an exactly known probability, so the
// seed protocol can report true transition log-probabilities.
struct EncounterParams {
    std::vector<AircraftInit> aircraft = {
        {-6000.0, 0.0, 5000.0, 200.0, 0.0},
        {6000.0, 0.0, 5000.0, 200.0, 180.0},
    };
    double dt = 1.0;                    // s
    int horizon = 40;
    double advisory_lead = 10.0;        // s, trigger when time-to-CPA below this
    double advisory_trigger = 1000.0;   // ft, and projected miss below this
    double commanded_rate = 12.0;       // ft/s commanded climb/descend
    double response_probability = 0.35; // per-step geometric response
    double noise_step = 2.0;            // ft/s per vertical-rate noise notch
    NmacParams nmac_params;

    void validate() const;
};

class EncounterProcess : public StochasticProcess {
public:
    explicit EncounterProcess(EncounterParams params);

    void reset() override;
    double transition(SeedStream& stream) override;
    bool event() const override;
    std::string state_blob() const override;
    std::unique_ptr<StochasticProcess> clone() const override;

    const EncounterState& state() const { return state_; }
    const std::array<double, 5>& noise_weights() const { return noise_weights_; }

private:
    EncounterParams params_;
    EncounterState state_;
    std::array<double, 5> noise_weights_{};

    void issue_advisories();
};

std::unique_ptr<SeedWrappedSimulator> make_encounter_simulator(EncounterParams params);

} // namespace ast::sim
