#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "ast/core/trajectory_log.hpp"

using namespace ast;

namespace {

Trajectory random_trajectory(std::mt19937_64& rng) {
    std::normal_distribution<double> value(0.0, 5.0);
    std::uniform_int_distribution<int> len(1, 8);
    std::uniform_int_distribution<int> blob_byte(0, 255);
    std::uniform_int_distribution<int> coin(0, 1);

    Trajectory t;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
        const bool last = i == n - 1;
        std::string blob(4, '\0');
        for (auto& c : blob) c = static_cast<char>(blob_byte(rng));
        EnvironmentAction action = coin(rng) ? EnvironmentAction::seed(rng())
                                             : EnvironmentAction::continuous({value(rng), value(rng)});
        t.append(TrajectoryStep{blob, std::move(action), value(rng), value(rng),
                                last && coin(rng), last});
    }
    return t;
}

} // namespace

TEST_CASE("trajectory logs round-trip exactly") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 100; ++round) {
        const Trajectory t = random_trajectory(rng);
        std::stringstream stream;
        write_trajectory_log(stream, TrajectoryLogHeader{"deadbeef00000000", "toy"}, "run-x", t);
        const TrajectoryLog log = read_trajectory_log(stream);

        CHECK(log.header.config_hash == "deadbeef00000000");
        CHECK(log.header.scenario == "toy");
        REQUIRE(static_cast<int>(log.records.size()) == t.length());
        for (int i = 0; i < t.length(); ++i) {
            const auto& rec = log.records[i];
            CHECK(rec.run_id == "run-x");
            CHECK(rec.t == i + 1);
            CHECK(rec.state_blob == t.steps[i].state_blob);
            CHECK(rec.action == t.steps[i].action);
            CHECK(rec.reward == t.steps[i].reward);
            CHECK(rec.action_log_likelihood == t.steps[i].action_log_likelihood);
            CHECK(rec.event == t.steps[i].event);
            CHECK(rec.terminal == t.steps[i].terminal);
        }
    }
}

TEST_CASE("infinite rewards survive the log round-trip") {
    Trajectory t;
    t.append(TrajectoryStep{"blob", EnvironmentAction::seed(5),
                            -std::numeric_limits<double>::infinity(), -2.5, false, true});
    std::stringstream stream;
    write_trajectory_log(stream, TrajectoryLogHeader{"0", "toy"}, "run-y", t);
    const TrajectoryLog log = read_trajectory_log(stream);
    REQUIRE(log.records.size() == 1);
    CHECK(std::isinf(log.records[0].reward));
    CHECK(log.records[0].reward < 0.0);
}

TEST_CASE("action encoding round-trips both payload kinds") {
    const EnvironmentAction seed = EnvironmentAction::seed(0xffffffffffffffffull);
    CHECK(decode_action(encode_action(seed)) == seed);
    const EnvironmentAction vec = EnvironmentAction::continuous({-1.5, 0.0, 3.25e-17});
    CHECK(decode_action(encode_action(vec)) == vec);
    CHECK(encode_action(EnvironmentAction::seed(42)) == "s:42");
}

TEST_CASE("corrupt logs are rejected with a line number") {
    std::stringstream empty;
    CHECK_THROWS_AS(read_trajectory_log(empty), std::runtime_error);

    std::stringstream bad_header("not a log\n");
    CHECK_THROWS_AS(read_trajectory_log(bad_header), std::runtime_error);

    std::stringstream short_row;
    short_row << "# ast-trajectory-log v1 fields=... config_hash=x scenario=y\n"
              << "run\t1\tAAAA\n";
    CHECK_THROWS_WITH_AS(read_trajectory_log(short_row), doctest::Contains("line 2"),
                         std::runtime_error);

    std::stringstream bad_number;
    bad_number << "# ast-trajectory-log v1 fields=... config_hash=x scenario=y\n"
               << "run\t1\tAAAA\tc:1\tnot-a-number\t0\t0\t1\n";
    CHECK_THROWS_AS(read_trajectory_log(bad_number), std::runtime_error);
}
