// Command-line front end: run, sweep and graph-export.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "layersim/config.hpp"
#include "layersim/output.hpp"
#include "layersim/sweep.hpp"

namespace fs = std::filesystem;
using namespace layersim;

int main(int argc, char** argv) {
    CLI::App app{"Coupled circuit / communication / decision layer simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    int parallelism = 1;
    bool quiet = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("config", config_path, "Configuration file")->required()->check(CLI::ExistingFile);
        cmd->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();
        cmd->add_flag("--quiet", quiet, "Suppress progress output");
    };

    CLI::App* run_cmd = app.add_subcommand("run", "Execute one run and write raster, summary, metrics and config");
    add_common(run_cmd);
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Execute a parameter sweep and write sweep.csv");
    add_common(sweep_cmd);
    sweep_cmd->add_option("--parallelism", parallelism, "Worker threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    CLI::App* graph_cmd = app.add_subcommand("graph-export", "Write the run's communication graph as an edge list");
    add_common(graph_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            const ValidatedParams vp = validate_params(config::load_run_config(config_path));
            output::RunFiles files;
            const metrics::MetricsReport r = output::run_to_directory(vp, out_dir, &files);
            if (!quiet) {
                std::cout << "c_avg=" << format_real(r.c_avg) << " P_util=" << format_real(r.P_util)
                          << " gini=" << format_real(r.gini) << " a_avg_mean=" << format_real(r.a_avg_mean) << '\n'
                          << "wrote " << files.raster.string() << ", " << files.summary.string() << ", "
                          << files.metrics.string() << ", " << files.config.string() << '\n';
            }
        } else if (sweep_cmd->parsed()) {
            const sweep::SweepSpec spec = sweep::load_sweep_config(config_path);
            const fs::path path = sweep::sweep_to_directory(spec, out_dir, parallelism);
            if (!quiet)
                std::cout << "swept " << spec.values.size() << " values x " << spec.seeds.size() << " seeds; wrote "
                          << path.string() << '\n';
        } else if (graph_cmd->parsed()) {
            const ValidatedParams vp = validate_params(config::load_run_config(config_path));
            const fs::path path = output::export_graph(vp, out_dir);
            if (!quiet) std::cout << "wrote " << path.string() << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
