#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ast/cli/config.hpp"
#include "ast/cli/harness.hpp"
#include "ast/util/encoding.hpp"

namespace {

int do_run(const std::string& config_path, const std::string& output_dir) {
    const ast::cli::RunConfig config = ast::cli::load_run_config(config_path);
    ast::cli::cmd_run(config, output_dir, &std::cout);
    return 0;
}

int do_replay(const std::string& log_path, const std::string& config_path, bool ignore_hash) {
    const ast::cli::RunConfig config = ast::cli::load_run_config(config_path);
    const ast::cli::ReplayReport report = ast::cli::cmd_replay(config, log_path, ignore_hash);
    std::cout << "replay: " << report.steps_checked << " steps checked, " << report.issues.size()
              << " mismatches";
    if (!report.hash_matched) std::cout << " (config hash ignored)";
    std::cout << '\n';
    for (const auto& issue : report.issues) {
        std::cout << "  step " << issue.t << ": " << issue.field;
        if (issue.field != "state_blob") {
            std::cout << " logged=" << ast::format_double(issue.logged)
                      << " recomputed=" << ast::format_double(issue.recomputed);
        }
        std::cout << '\n';
    }
    return report.ok() ? 0 : 2;
}

int do_compare(const std::vector<std::string>& summaries, const std::string& out_path) {
    std::cout << ast::cli::cmd_compare(summaries, out_path);
    return 0;
}

int do_export_plot(const std::vector<std::string>& run_dirs, const std::string& out_path) {
    const std::string table = ast::cli::cmd_export_plot(run_dirs);
    if (out_path.empty()) {
        std::cout << table;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error(out_path + ": cannot open for writing");
        out << table;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Black-box failure search: drives a simulator's environment "
                 "actions toward the most-likely failure of the system under test"};
    app.require_subcommand(1);

    std::string config_path;
    std::string output_dir;
    std::string log_path;
    std::string out_path;
    bool ignore_hash = false;
    std::vector<std::string> inputs;

    auto* run = app.add_subcommand("run", "Execute a solver on a configured scenario");
    run->add_option("-c,--config", config_path, "Run config (JSON)")->required();
    run->add_option("-o,--output-dir", output_dir,
                    "Output directory (overrides config and AST_OUTPUT_DIR)");

    auto* replay = app.add_subcommand("replay", "Re-execute a trajectory log and verify it");
    replay->add_option("log", log_path, "Trajectory log file")->required();
    replay->add_option("-c,--config", config_path, "Run config the log was produced with")
        ->required();
    replay->add_flag("--ignore-hash", ignore_hash, "Skip the config hash check");

    auto* compare = app.add_subcommand("compare", "Rank runs by best total reward");
    compare->add_option("summaries", inputs, "summary.json files (>= 2)")->required();
    compare->add_option("-o,--output", out_path, "Also write the sorted rows as JSON");

    auto* export_plot = app.add_subcommand("export-plot", "Merge reward curves into plot data");
    export_plot->add_option("runs", inputs, "Run directories")->required();
    export_plot->add_option("-o,--output", out_path, "Write TSV here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return do_run(config_path, output_dir);
        if (replay->parsed()) return do_replay(log_path, config_path, ignore_hash);
        if (compare->parsed()) return do_compare(inputs, out_path);
        if (export_plot->parsed()) return do_export_plot(inputs, out_path);
    } catch (const ast::cli::ConfigError& err) {
        std::cerr << "config error: " << err.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& err) {
        std::cerr << "config error: " << err.what() << '\n';
        return 1;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    return 0;
}
