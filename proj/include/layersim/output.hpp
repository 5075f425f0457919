#pragma once

#include <filesystem>
#include <iosfwd>

#include "layersim/core.hpp"
#include "layersim/engine.hpp"
#include "layersim/metrics.hpp"

namespace layersim::output {

inline constexpr const char* kRasterFile = "raster.txt";
inline constexpr const char* kSummaryFile = "summary.csv";
inline constexpr const char* kMetricsFile = "metrics.csv";
inline constexpr const char* kResolvedConfigFile = "config.resolved";
inline constexpr const char* kGraphFile = "graph.edges";

/// One line per step: N space-separated values in {-1, 0, 1}.
void write_raster_line(std::ostream& out, const engine::StepFrame& frame);

void write_summary_header(std::ostream& out);  // t,n,a_avg,P_all,cooperator_count,defector_count,ignore_count
void write_summary_row(std::ostream& out, const engine::StepFrame& frame);

void write_metrics_header(std::ostream& out);  // seed,N,topology,lambda_min,p_err,c_avg,P_util,gini,a_avg_mean
void write_metrics_row(std::ostream& out, const SystemParams& params, const metrics::MetricsReport& report);

struct RunFiles {
    std::filesystem::path raster;
    std::filesystem::path summary;
    std::filesystem::path metrics;
    std::filesystem::path config;
};

/// Executes one run and writes the raster, per-step summary, metrics row and
/// resolved config into out_dir (created if missing). Returns the metrics.
metrics::MetricsReport run_to_directory(const ValidatedParams& vp, const std::filesystem::path& out_dir,
                                        RunFiles* files = nullptr);

/// Builds the run's communication graph and writes it as an edge list.
std::filesystem::path export_graph(const ValidatedParams& vp, const std::filesystem::path& out_dir);

}  // namespace layersim::output
