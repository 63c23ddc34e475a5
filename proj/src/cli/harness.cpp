#include "ast/cli/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "ast/core/rollout.hpp"
#include "ast/core/trajectory_log.hpp"
#include "ast/solvers/exhaustive.hpp"
#include "ast/solvers/random_search.hpp"
#include "ast/util/encoding.hpp"
#include "ast/util/rng.hpp"

namespace ast::cli {

namespace {

using nlohmann::json;

std::string make_run_id(std::uint64_t rng_seed) {
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    std::uint64_t state =
        static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(now).count()) ^
        (rng_seed * 0x9e3779b97f4a7c15ull);
    return "run-" + to_hex64(splitmix64(state)).substr(4);
}

json summary_to_json(const RunSummary& summary) {
    json j;
    j["run_id"] = summary.run_id;
    j["config_hash"] = summary.config_hash;
    j["scenario"] = summary.scenario;
    j["solver"] = summary.solver;
    j["best_total_reward"] = summary.best_total_reward;
    j["best_log_likelihood"] = summary.best_log_likelihood;
    j["found_event"] = summary.found_event;
    if (summary.first_event_iteration) {
        j["first_event_iteration"] = *summary.first_event_iteration;
    } else {
        j["first_event_iteration"] = nullptr;
    }
    j["iterations_used"] = summary.iterations_used;
    j["sim_steps_used"] = summary.sim_steps_used;
    j["wall_time_seconds"] = summary.wall_time_seconds;
    return j;
}

// Relative comparison; exact equality (including infinities) short-circuits.
bool within_tolerance(double a, double b, double rel_tol) {
    if (a == b) return true;
    const double scale = std::max({std::abs(a), std::abs(b), 1.0});
    return std::abs(a - b) <= rel_tol * scale;
}

} // namespace

SolverReport run_solver(const RunConfig& config, Simulator& sim) {
    if (config.solver == "mcts") {
        return solve_mcts(sim, config.reward, config.mcts);
    }
    if (config.solver == "cem") {
        return solve_cem(sim, config.reward, config.cem);
    }
    if (config.solver == "random") {
        return solve_random(sim, config.reward, config.random_rollouts, config.rng_seed,
                            config.budget);
    }
    if (config.solver == "exhaustive") {
        return solve_exhaustive(sim, config.reward, config.exhaustive_max_sequences);
    }
    throw ConfigError("solver: unknown solver \"" + config.solver + "\"");
}

RunSummary cmd_run(const RunConfig& config, const std::string& out_dir_override,
                   std::ostream* echo) {
    namespace fs = std::filesystem;

    std::string out_root = config.output_dir;
    if (const char* env = std::getenv("AST_OUTPUT_DIR"); env && *env) out_root = env;
    if (!out_dir_override.empty()) out_root = out_dir_override;

    auto sim = make_simulator(config);
    const auto started = std::chrono::steady_clock::now();
    SolverReport report = run_solver(config, *sim);
    const auto finished = std::chrono::steady_clock::now();

    RunSummary summary;
    summary.run_id = make_run_id(config.rng_seed);
    summary.config_hash = config.config_hash;
    summary.scenario = config.scenario;
    summary.solver = config.solver;
    summary.best_total_reward = report.best_trajectory.total_reward;
    summary.best_log_likelihood = report.best_trajectory.total_log_likelihood;
    summary.found_event = report.best_trajectory.found_event;
    summary.first_event_iteration = report.first_event_iteration;
    summary.iterations_used = report.iterations_used;
    summary.sim_steps_used = report.sim_steps_used;
    summary.wall_time_seconds =
        std::chrono::duration<double>(finished - started).count();

    const fs::path run_dir = fs::path(out_root) / summary.run_id;
    fs::create_directories(run_dir);

    {
        std::ofstream out(run_dir / "summary.json");
        out << summary_to_json(summary).dump(2) << '\n';
    }
    {
        std::ofstream out(run_dir / "best_trajectory.log");
        write_trajectory_log(out, TrajectoryLogHeader{config.config_hash, config.scenario},
                             summary.run_id, report.best_trajectory);
    }
    {
        std::ofstream out(run_dir / "reward_curve.tsv");
        out << "iteration\tbest_total_reward\n";
        for (const auto& [iteration, best] : report.best_reward_curve) {
            out << iteration << '\t' << format_double(best) << '\n';
        }
    }

    if (echo) {
        *echo << "run " << summary.run_id << ": scenario=" << summary.scenario
              << " solver=" << summary.solver << " best_total_reward="
              << format_double(summary.best_total_reward)
              << " found_event=" << (summary.found_event ? "true" : "false");
        if (summary.first_event_iteration) {
            *echo << " first_event_iteration=" << *summary.first_event_iteration;
        }
        *echo << " sim_steps=" << summary.sim_steps_used << "\n  -> " << run_dir.string() << '\n';
    }
    return summary;
}

ReplayReport cmd_replay(const RunConfig& config, const std::string& log_path, bool ignore_hash) {
    std::ifstream in(log_path, std::ios::binary);
    if (!in) throw std::runtime_error(log_path + ": cannot open trajectory log");
    const TrajectoryLog log = read_trajectory_log(in);

    ReplayReport report;
    report.hash_matched = log.header.config_hash == config.config_hash;
    if (!report.hash_matched && !ignore_hash) {
        throw ConfigError("replay: config hash " + config.config_hash +
                          " does not match log hash " + log.header.config_hash +
                          " (pass --ignore-hash to override)");
    }

    std::vector<EnvironmentAction> actions;
    actions.reserve(log.records.size());
    for (const auto& record : log.records) actions.push_back(record.action);

    auto sim = make_simulator(config);
    const Trajectory replayed = rollout(*sim, fixed_sequence_source(actions), config.reward);
    if (replayed.length() != static_cast<int>(log.records.size())) {
        throw std::runtime_error("replay: trajectory length diverged (log " +
                                 std::to_string(log.records.size()) + " steps, replay " +
                                 std::to_string(replayed.length()) + ")");
    }

    constexpr double kRelTol = 1e-9;
    for (std::size_t i = 0; i < log.records.size(); ++i) {
        const auto& logged = log.records[i];
        const auto& step = replayed.steps[i];
        ++report.steps_checked;
        if (!within_tolerance(logged.reward, step.reward, kRelTol)) {
            report.issues.push_back(
                ReplayStepIssue{logged.t, "reward", logged.reward, step.reward});
        }
        if (!within_tolerance(logged.action_log_likelihood, step.action_log_likelihood, kRelTol)) {
            report.issues.push_back(ReplayStepIssue{logged.t, "action_log_likelihood",
                                                    logged.action_log_likelihood,
                                                    step.action_log_likelihood});
        }
        if (logged.state_blob != step.state_blob) {
            report.issues.push_back(ReplayStepIssue{logged.t, "state_blob", 0.0, 0.0});
        }
    }
    return report;
}

RunSummary read_summary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open summary");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& err) {
        throw std::runtime_error(path + ": not valid JSON: " + err.what());
    }
    RunSummary summary;
    try {
        summary.run_id = j.at("run_id").get<std::string>();
        summary.config_hash = j.at("config_hash").get<std::string>();
        summary.scenario = j.at("scenario").get<std::string>();
        summary.solver = j.at("solver").get<std::string>();
        summary.best_total_reward = j.at("best_total_reward").get<double>();
        summary.best_log_likelihood = j.at("best_log_likelihood").get<double>();
        summary.found_event = j.at("found_event").get<bool>();
        if (!j.at("first_event_iteration").is_null()) {
            summary.first_event_iteration = j.at("first_event_iteration").get<long>();
        }
        summary.iterations_used = j.at("iterations_used").get<long>();
        summary.sim_steps_used = j.at("sim_steps_used").get<long>();
        summary.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    } catch (const json::exception& err) {
        throw std::runtime_error(path + ": malformed summary: " + err.what());
    }
    return summary;
}

std::string cmd_compare(const std::vector<std::string>& summary_paths,
                        const std::string& out_path) {
    if (summary_paths.size() < 2) {
        throw ConfigError("compare: needs at least two summary files");
    }
    std::vector<RunSummary> rows;
    for (const auto& path : summary_paths) rows.push_back(read_summary(path));
    std::sort(rows.begin(), rows.end(), [](const RunSummary& a, const RunSummary& b) {
        if (a.best_total_reward != b.best_total_reward) {
            return a.best_total_reward > b.best_total_reward;
        }
        return a.run_id < b.run_id;
    });

    std::ostringstream table;
    table << std::left << std::setw(18) << "run_id" << std::setw(16) << "scenario"
          << std::setw(12) << "solver" << std::setw(22) << "best_total_reward" << std::setw(22)
          << "best_log_likelihood" << std::setw(14) << "first_event" << std::setw(12)
          << "wall_time_s" << '\n';
    json out = json::array();
    for (const auto& row : rows) {
        table << std::left << std::setw(18) << row.run_id << std::setw(16) << row.scenario
              << std::setw(12) << row.solver << std::setw(22)
              << format_double(row.best_total_reward) << std::setw(22)
              << format_double(row.best_log_likelihood) << std::setw(14)
              << (row.first_event_iteration ? std::to_string(*row.first_event_iteration) : "-")
              << std::setw(12) << format_double(row.wall_time_seconds) << '\n';
        out.push_back(summary_to_json(row));
    }
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw std::runtime_error(out_path + ": cannot write comparison file");
        file << out.dump(2) << '\n';
    }
    return table.str();
}

std::string cmd_export_plot(const std::vector<std::string>& run_dirs) {
    if (run_dirs.empty()) throw ConfigError("export-plot: needs at least one run directory");
    std::ostringstream out;
    out << "run_id\titeration\tbest_total_reward\n";
    for (const auto& dir : run_dirs) {
        namespace fs = std::filesystem;
        const fs::path curve_path = fs::path(dir) / "reward_curve.tsv";
        std::ifstream curve(curve_path);
        if (!curve) {
            throw std::runtime_error(curve_path.string() + ": cannot open reward curve");
        }
        const std::string run_id = fs::path(dir).filename().string();
        std::string line;
        std::getline(curve, line); // header
        while (std::getline(curve, line)) {
            if (line.empty()) continue;
            out << run_id << '\t' << line << '\n';
        }
    }
    return out.str();
}

} // namespace ast::cli
