#include "layersim/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace layersim::metrics {

namespace {

std::span<const engine::StepFrame> retained(std::span<const engine::StepFrame> frames, int burn_in) {
    if (burn_in < 0) throw std::domain_error("burn_in must be >= 0");
    if (static_cast<std::size_t>(burn_in) >= frames.size())
        throw std::domain_error("burn_in leaves no frames to average");
    return frames.subspan(static_cast<std::size_t>(burn_in));
}

}  // namespace

double avg_cooperation(std::span<const engine::StepFrame> frames, int burn_in) {
    const auto kept = retained(frames, burn_in);
    double sum = 0.0;
    for (const auto& f : kept)
        sum += static_cast<double>(f.count(AgentStrategy::Cooperate)) / static_cast<double>(f.strategies.size());
    return sum / static_cast<double>(kept.size());
}

std::vector<double> time_avg_power(std::span<const engine::StepFrame> frames, int burn_in) {
    const auto kept = retained(frames, burn_in);
    std::vector<double> avg(kept.front().P.size(), 0.0);
    for (const auto& f : kept)
        for (std::size_t i = 0; i < avg.size(); ++i) avg[i] += f.P[i];
    for (auto& x : avg) x /= static_cast<double>(kept.size());
    return avg;
}

double power_utilisation(std::span<const double> P_i_avg, const ValidatedParams& vp) {
    const double total = std::accumulate(P_i_avg.begin(), P_i_avg.end(), 0.0);
    return 4.0 * total / (static_cast<double>(vp.N()) * vp.P_typ);
}

double gini_index(std::span<const double> values) {
    if (values.empty()) throw std::domain_error("gini_index: empty input");
    std::vector<double> sorted(values.begin(), values.end());
    std::stable_sort(sorted.begin(), sorted.end());
    double total = 0.0;
    double ranked = 0.0;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        total += sorted[k];
        ranked += static_cast<double>(k + 1) * sorted[k];
    }
    if (!(total > 0.0)) throw std::domain_error("gini_index: values must have a positive sum");
    const double n = static_cast<double>(sorted.size());
    return 2.0 / n * (ranked / total) - (n + 1.0) / n;
}

double mean_a_avg(std::span<const engine::StepFrame> frames, int burn_in) {
    const auto kept = retained(frames, burn_in);
    double sum = 0.0;
    for (const auto& f : kept) sum += f.a_avg;
    return sum / static_cast<double>(kept.size());
}

MetricsReport compute_report(const engine::RunResult& result) {
    const int burn_in = result.params.params.burn_in;
    MetricsReport r;
    r.c_avg = avg_cooperation(result.frames, burn_in);
    r.P_i_avg = time_avg_power(result.frames, burn_in);
    r.P_util = power_utilisation(r.P_i_avg, result.params);
    r.gini = gini_index(r.P_i_avg);
    r.a_avg_mean = mean_a_avg(result.frames, burn_in);
    return r;
}

StreamingMetrics::StreamingMetrics(const ValidatedParams& vp, int burn_in)
    : vp_(vp), burn_in_(burn_in), power_sum_(static_cast<std::size_t>(vp.N()), 0.0) {
    if (burn_in < 0) throw std::domain_error("burn_in must be >= 0");
}

void StreamingMetrics::observe(const engine::StepFrame& frame) {
    if (frames_seen_++ < burn_in_) return;
    ++retained_;
    coop_fraction_sum_ +=
        static_cast<double>(frame.count(AgentStrategy::Cooperate)) / static_cast<double>(frame.strategies.size());
    a_avg_sum_ += frame.a_avg;
    for (std::size_t i = 0; i < power_sum_.size(); ++i) power_sum_[i] += frame.P[i];
}

MetricsReport StreamingMetrics::report() const {
    if (retained_ == 0) throw std::domain_error("burn_in leaves no frames to average");
    const double T = static_cast<double>(retained_);
    MetricsReport r;
    r.c_avg = coop_fraction_sum_ / T;
    r.a_avg_mean = a_avg_sum_ / T;
    r.P_i_avg = power_sum_;
    for (auto& x : r.P_i_avg) x /= T;
    r.P_util = power_utilisation(r.P_i_avg, vp_);
    r.gini = gini_index(r.P_i_avg);
    return r;
}

}  // namespace layersim::metrics
