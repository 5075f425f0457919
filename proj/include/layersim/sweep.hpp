#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "layersim/config.hpp"
#include "layersim/core.hpp"
#include "layersim/metrics.hpp"

namespace layersim::sweep {

enum class SweepAxis { SystemSize, LambdaMin, ErrorProb, Topology };

/// Config spelling of an axis: system_size, lambda_min, p_err, topology.
std::string axis_name(SweepAxis axis);
SweepAxis parse_axis(const std::string& name);

/// A number for the numeric axes (N is stored as a double), a topology otherwise.
using AxisValue = std::variant<double, TopologySpec>;

std::string value_label(const AxisValue& value);

struct SweepSpec {
    SystemParams base;
    SweepAxis axis = SweepAxis::SystemSize;
    std::vector<AxisValue> values;
    std::vector<uint64_t> seeds;
};

/// Parameters of one sweep point.
SystemParams point_params(const SweepSpec& spec, const AxisValue& value, uint64_t seed);

/// Reads a sweep config: the single-run keys (the swept key may be omitted)
/// plus axis, values (comma-separated) and seeds (comma-separated, or a..b).
/// Every value must produce valid parameters.
SweepSpec parse_sweep_config(const config::KeyValueFile& kv);
SweepSpec load_sweep_config(const std::filesystem::path& path);

struct PointResult {
    AxisValue value;
    uint64_t seed = 0;
    SystemParams params;
    std::optional<metrics::MetricsReport> report;
    std::string error;  // set when report is empty
};

struct Aggregate {
    AxisValue value;
    int ok_runs = 0;
    // Means and sample standard deviations over the successful runs.
    double c_avg = 0, P_util = 0, gini = 0, a_avg_mean = 0;
    double c_avg_std = 0, P_util_std = 0, gini_std = 0, a_avg_mean_std = 0;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<PointResult> points;  // sorted by (value, seed)
    std::vector<Aggregate> aggregates;  // one per value, same value order
};

/// Values in output order: numeric ascending, topologies by label.
std::vector<AxisValue> sorted_values(const SweepSpec& spec);

using PointRunner = std::function<metrics::MetricsReport(const SystemParams&)>;

/// Default point runner: validate, simulate without keeping the trace, report.
metrics::MetricsReport run_point(const SystemParams& params);

/// Runs every (value, seed) point on `parallelism` worker threads. A failing
/// point is recorded and the sweep continues. The result does not depend on
/// the number of workers.
SweepResult run_sweep(const SweepSpec& spec, int parallelism, const PointRunner& runner = run_point);

/// kind,axis,value,seed,N,topology,lambda_min,p_err,c_avg,P_util,gini,a_avg_mean,
/// c_avg_std,P_util_std,gini_std,a_avg_mean_std,status
/// Run rows have kind=run and empty *_std columns; each value's run rows are
/// followed by one kind=aggregate row holding means and standard deviations.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

inline constexpr const char* kSweepFile = "sweep.csv";

std::filesystem::path sweep_to_directory(const SweepSpec& spec, const std::filesystem::path& out_dir,
                                         int parallelism);

}  // namespace layersim::sweep
