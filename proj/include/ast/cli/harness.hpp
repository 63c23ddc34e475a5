#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ast/cli/config.hpp"
#include "ast/solvers/report.hpp"

namespace ast::cli {

struct RunSummary {
    std::string run_id;
    std::string config_hash;
    std::string scenario;
    std::string solver;
    double best_total_reward = 0.0;
    double best_log_likelihood = 0.0;
    bool found_event = false;
    std::optional<long> first_event_iteration;
    long iterations_used = 0;
    long sim_steps_used = 0;
    double wall_time_seconds = 0.0;
};

// Dispatches to the configured solver. The CLI wraps this; tests call it
// directly.
SolverReport run_solver(const RunConfig& config, Simulator& sim);

// Executes a run and writes summary.json, best_trajectory.log and
// reward_curve.tsv under <output_dir>/<run_id>/. Returns the summary;
// out_dir_override (CLI flag or environment) wins over the config value.
RunSummary cmd_run(const RunConfig& config, const std::string& out_dir_override = "",
                   std::ostream* echo = nullptr);

struct ReplayStepIssue {
    int t = 0;
    std::string field; // reward | action_log_likelihood | state_blob
    double logged = 0.0;
    double recomputed = 0.0;
};

struct ReplayReport {
    int steps_checked = 0;
    std::vector<ReplayStepIssue> issues;
    bool hash_matched = true;
    bool ok() const { return issues.empty(); }
};

// Re-executes a trajectory log through the configured scenario and verifies
// rewards and log-likelihoods within 1e-9 relative tolerance (snapshots must
// match exactly). Throws ConfigError on a config-hash mismatch unless
// ignore_hash is set.
ReplayReport cmd_replay(const RunConfig& config, const std::string& log_path,
                        bool ignore_hash = false);

// Reads >= 2 summary.json files and renders a comparison table sorted by
// best_total_reward descending (ties by run_id). Optionally writes the sorted
// rows as JSON to out_path.
std::string cmd_compare(const std::vector<std::string>& summary_paths,
                        const std::string& out_path = "");

// Merges the reward curves of one or more run directories into long-format
// TSV: run_id <tab> iteration <tab> best_total_reward.
std::string cmd_export_plot(const std::vector<std::string>& run_dirs);

RunSummary read_summary(const std::string& path);

} // namespace ast::cli
