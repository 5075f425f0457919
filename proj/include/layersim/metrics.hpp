#pragma once

#include <span>
#include <vector>

#include "layersim/core.hpp"
#include "layersim/engine.hpp"

namespace layersim::metrics {

struct MetricsReport {
    double c_avg = 0.0;       // time-mean fraction of cooperating agents
    double P_util = 0.0;      // delivered power relative to the optimum N*P_typ/4
    double gini = 0.0;        // inequality of the time-averaged per-agent power
    double a_avg_mean = 0.0;  // time-mean of the average resistor count
    std::vector<double> P_i_avg;
};

/// Mean over frames[burn_in..] of (#cooperators / N).
/// Throws std::domain_error if burn_in >= frames.size().
double avg_cooperation(std::span<const engine::StepFrame> frames, int burn_in);

/// Per-agent arithmetic mean of P_i over frames[burn_in..].
std::vector<double> time_avg_power(std::span<const engine::StepFrame> frames, int burn_in);

/// 4 * sum(P_i_avg) / (N * P_typ); exactly 1 when every agent sits at a_i = mu.
double power_utilisation(std::span<const double> P_i_avg, const ValidatedParams& vp);

/// Gini index over ascending-sorted values with 1-based ranks:
///   G = (2/N) * sum(i * x_i) / sum(x_i) - (N + 1)/N
/// Throws std::domain_error if the input is empty or sums to zero.
double gini_index(std::span<const double> values);

/// Mean of a_avg over frames[burn_in..].
double mean_a_avg(std::span<const engine::StepFrame> frames, int burn_in);

MetricsReport compute_report(const engine::RunResult& result);

/// Single-pass equivalent of compute_report for traces that are not kept.
/// Frames must be fed in order starting from t = 0.
class StreamingMetrics {
public:
    StreamingMetrics(const ValidatedParams& vp, int burn_in);

    void observe(const engine::StepFrame& frame);
    MetricsReport report() const;

private:
    ValidatedParams vp_;
    int burn_in_;
    long frames_seen_ = 0;
    long retained_ = 0;
    double coop_fraction_sum_ = 0.0;
    double a_avg_sum_ = 0.0;
    std::vector<double> power_sum_;
};

}  // namespace layersim::metrics
