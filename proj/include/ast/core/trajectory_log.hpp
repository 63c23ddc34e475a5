#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ast/core/trajectory.hpp"

namespace ast {

// Line-delimited trajectory log. One header line documenting the field
// order, then one tab-separated record per step:
//   run_id  t  state_blob(base64)  action  reward  action_log_likelihood  event  terminal
// Continuous actions serialize as "c:v1,v2,..."; seed actions as "s:token".
struct TrajectoryLogHeader {
    std::string config_hash;
    std::string scenario;
};

struct TrajectoryLogRecord {
    std::string run_id;
    int t = 0;
    std::string state_blob;
    EnvironmentAction action;
    double reward = 0.0;
    double action_log_likelihood = 0.0;
    bool event = false;
    bool terminal = false;
};

struct TrajectoryLog {
    TrajectoryLogHeader header;
    std::vector<TrajectoryLogRecord> records;
};

std::string encode_action(const EnvironmentAction& action);
EnvironmentAction decode_action(const std::string& text);

void write_trajectory_log(std::ostream& out, const TrajectoryLogHeader& header,
                          const std::string& run_id, const Trajectory& trajectory);

// Throws std::runtime_error with a line number on corrupt input.
TrajectoryLog read_trajectory_log(std::istream& in);

} // namespace ast
