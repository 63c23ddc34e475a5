#include <doctest.h>

#include <cmath>
#include <limits>

#include "ast/core/reward.hpp"

using namespace ast;

namespace {

StepOutcome make_outcome(bool event, bool terminal, double ll = 0.0) {
    StepOutcome o;
    o.event = event;
    o.terminal = terminal;
    o.action_log_likelihood = ll;
    return o;
}

} // namespace

TEST_CASE("reward_step hits the three reward cases exactly") {
    RewardSpec spec;
    spec.alpha = 1e4;
    spec.beta = 1e3;
    spec.use_terminal_heuristic = true;

    // event: reward is 0 no matter what else is set
    CHECK(reward_step(spec, make_outcome(true, true, -12.0), 3, 10) == 0.0);
    CHECK(reward_step(spec, make_outcome(true, true, -12.0), 10, 10) == 0.0);

    // horizon reached without event
    CHECK(reward_step(spec, make_outcome(false, true), 10, 10, 0.5) == -10500.0);
    CHECK(reward_step(spec, make_outcome(false, true), 10, 10, 0.0) == -10000.0);

    // mid-trajectory with a scenario-supplied penalty
    StepOutcome mid = make_outcome(false, false, -1.0);
    mid.action_penalty = 2.3;
    RewardSpec plain;
    CHECK(reward_step(plain, mid, 1, 10) == -2.3);
}

TEST_CASE("reward_step defaults g to -log-likelihood") {
    RewardSpec spec;
    StepOutcome mid = make_outcome(false, false, -1.75);
    CHECK(reward_step(spec, mid, 1, 5) == doctest::Approx(-1.75).epsilon(0));
}

TEST_CASE("reward_step applies the step heuristic") {
    RewardSpec spec;
    spec.eta = 2.0;
    spec.use_step_heuristic = true;
    StepOutcome mid = make_outcome(false, false, -1.0);
    CHECK(reward_step(spec, mid, 1, 5, std::nullopt, 3.0) == doctest::Approx(1.0 - 6.0));
}

TEST_CASE("reward_step with infinite alpha yields -infinity at the horizon") {
    RewardSpec spec;
    spec.alpha = std::numeric_limits<double>::infinity();
    const double r = reward_step(spec, make_outcome(false, true), 4, 4);
    CHECK(std::isinf(r));
    CHECK(r < 0.0);
    // the event case still pays zero
    CHECK(reward_step(spec, make_outcome(true, true), 4, 4) == 0.0);
}

TEST_CASE("reward_step rejects bad inputs") {
    RewardSpec spec;
    spec.use_terminal_heuristic = true;
    spec.beta = 1.0;
    CHECK_THROWS_AS(reward_step(spec, make_outcome(false, true), 4, 4), std::invalid_argument);

    RewardSpec step_spec;
    step_spec.use_step_heuristic = true;
    step_spec.eta = 1.0;
    CHECK_THROWS_AS(reward_step(step_spec, make_outcome(false, false), 1, 4),
                    std::invalid_argument);

    RewardSpec plain;
    CHECK_THROWS_AS(reward_step(plain, make_outcome(false, false), 5, 4), std::invalid_argument);
}

TEST_CASE("RewardSpec validation names the failing constraint") {
    RewardSpec bad_beta;
    bad_beta.beta = -1.0;
    CHECK_THROWS_WITH_AS(bad_beta.validate(), doctest::Contains("beta"), std::invalid_argument);

    RewardSpec bad_eta;
    bad_eta.eta = -0.5;
    CHECK_THROWS_WITH_AS(bad_eta.validate(), doctest::Contains("eta"), std::invalid_argument);

    RewardSpec bad_alpha;
    bad_alpha.alpha = -2.0;
    CHECK_THROWS_WITH_AS(bad_alpha.validate(), doctest::Contains("alpha"), std::invalid_argument);

    RewardSpec inf_alpha;
    inf_alpha.alpha = std::numeric_limits<double>::infinity();
    CHECK_NOTHROW(inf_alpha.validate());
}
