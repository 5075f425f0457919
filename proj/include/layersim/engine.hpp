#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "layersim/core.hpp"
#include "layersim/decision.hpp"
#include "layersim/network.hpp"
#include "layersim/physical.hpp"
#include "layersim/rng.hpp"

namespace layersim::engine {

/// Snapshot of the whole system after step t (t = 0 is the initial condition).
struct StepFrame {
    int t = 0;
    std::vector<AgentStrategy> strategies;
    std::vector<int> a;
    std::vector<double> P;
    long n = 0;
    double a_avg = 0.0;

    int count(AgentStrategy s) const;
    double total_power() const;

    bool operator==(const StepFrame&) const = default;
};

struct RunResult {
    ValidatedParams params;
    std::vector<StepFrame> frames;  // steps + 1 entries
    std::vector<double> genes;
    network::CommGraph graph;
};

/// The initial resistor draw could not land below the optimum.
class InitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InitialState {
    std::vector<decision::AgentRecord> agents;
    StepFrame frame0;
};

inline constexpr int kMaxInitialRedraws = 1000;

/// Draws each a_i uniformly from [1, floor(mu)] and redraws the whole vector
/// until n < N*mu, so the bank starts on the under-loaded side of the optimum.
/// All agents start as Ignore with a gain below any threshold.
/// Throws InitError after kMaxInitialRedraws failed attempts.
InitialState init_state(const ValidatedParams& vp, std::span<const double> genes, Rng& rng);

/// Advances every agent by one synchronous round:
/// broadcast S[t-1], decide, apply all actions, recompute powers, store gains.
/// The dynamics stream is consumed as: all channel draws (receivers ascending,
/// senders ascending), then decision draws in agent id order.
StepFrame step(std::vector<decision::AgentRecord>& agents, const network::CommGraph& graph,
               const ValidatedParams& vp, Rng& rng, const StepFrame& prev);

/// The run's communication graph, built from its graph substream.
network::CommGraph build_run_graph(const ValidatedParams& vp);

/// Stateful driver around init_state and step that reuses its buffers.
class Simulation {
public:
    explicit Simulation(const ValidatedParams& vp);

    const StepFrame& frame() const noexcept { return frame_; }
    const network::CommGraph& graph() const noexcept { return graph_; }
    const std::vector<double>& genes() const noexcept { return genes_; }
    const std::vector<decision::AgentRecord>& agents() const noexcept { return agents_; }

    void advance();

private:
    ValidatedParams vp_;
    network::CommGraph graph_;
    std::vector<double> genes_;
    std::vector<decision::AgentRecord> agents_;
    Rng dynamics_;
    StepFrame frame_;
    std::vector<int> inbox_sums_;
    StepFrame scratch_;
};

using FrameObserver = std::function<void(const StepFrame&)>;

/// Runs all steps, handing every frame (including t = 0) to the observer
/// without keeping the trace. Returns the finished simulation.
Simulation run_streaming(const ValidatedParams& vp, const FrameObserver& observer);

/// Full trace; a pure function of the parameters including the seed.
RunResult run(const ValidatedParams& vp);

}  // namespace layersim::engine
