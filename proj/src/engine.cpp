#include "layersim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace layersim::engine {

using decision::AgentRecord;

int StepFrame::count(AgentStrategy s) const {
    return static_cast<int>(std::count(strategies.begin(), strategies.end(), s));
}

double StepFrame::total_power() const { return std::accumulate(P.begin(), P.end(), 0.0); }

namespace {

void fill_frame(StepFrame& frame, int t, const std::vector<AgentRecord>& agents, const physical::Circuit& c) {
    const std::size_t N = agents.size();
    frame.t = t;
    frame.strategies.resize(N);
    frame.a.resize(N);
    frame.P.resize(N);
    long n = 0;
    for (std::size_t i = 0; i < N; ++i) {
        frame.strategies[i] = agents[i].strategy;
        frame.a[i] = agents[i].a;
        n += agents[i].a;
    }
    frame.n = n;
    frame.a_avg = static_cast<double>(n) / static_cast<double>(N);
    for (std::size_t i = 0; i < N; ++i) frame.P[i] = physical::power_per_agent(frame.a[i], n, c);
}

// Phases 1-5 of one round, writing into next.
void step_into(std::vector<AgentRecord>& agents, const network::CommGraph& graph, const ValidatedParams& vp,
               Rng& rng, const StepFrame& prev, StepFrame& next, std::vector<int>& sums) {
    const physical::Circuit circuit = physical::Circuit::from(vp);
    const double lambda_min = vp.params.lambda_min;

    network::broadcast_sums(prev.strategies, graph, vp.params.p_err, rng, sums);

    // Decide for everyone before acting, so nobody sees this round's actions.
    std::vector<AgentStrategy>& choices = next.strategies;
    choices.resize(agents.size());
    for (std::size_t i = 0; i < agents.size(); ++i) choices[i] = decision::decide(agents[i], sums[i], lambda_min, rng);
    for (std::size_t i = 0; i < agents.size(); ++i) agents[i] = decision::apply_action(agents[i], choices[i]);

    fill_frame(next, prev.t + 1, agents, circuit);

    for (std::size_t i = 0; i < agents.size(); ++i) {
        agents[i].last_gain = physical::exact_gain(next.P[i], agents[i].last_power);
        agents[i].last_power = next.P[i];
    }
}

}  // namespace

InitialState init_state(const ValidatedParams& vp, std::span<const double> genes, Rng& rng) {
    const int N = vp.N();
    if (static_cast<int>(genes.size()) != N) throw std::invalid_argument("init_state: gene count differs from N");
    const auto upper = static_cast<int64_t>(std::floor(vp.mu));
    if (upper < 1) throw InitError("init_state: mu < 1 leaves no admissible initial resistor count");
    const double optimum = N * vp.mu;

    InitialState init;
    init.agents.resize(static_cast<std::size_t>(N));
    bool below_optimum = false;
    for (int attempt = 0; attempt < kMaxInitialRedraws && !below_optimum; ++attempt) {
        long n = 0;
        for (auto& agent : init.agents) {
            agent.a = static_cast<int>(rng.uniform_int(1, upper));
            n += agent.a;
        }
        below_optimum = static_cast<double>(n) < optimum;
    }
    if (!below_optimum)
        throw InitError("init_state: no initial draw with n < N*mu after " + std::to_string(kMaxInitialRedraws) +
                        " attempts (mu = " + format_real(vp.mu) + ")");

    for (int i = 0; i < N; ++i) {
        auto& agent = init.agents[static_cast<std::size_t>(i)];
        agent.id = i;
        agent.strategy = AgentStrategy::Ignore;
        agent.gene = genes[static_cast<std::size_t>(i)];
        agent.last_gain = -std::numeric_limits<double>::infinity();
    }
    fill_frame(init.frame0, 0, init.agents, physical::Circuit::from(vp));
    for (std::size_t i = 0; i < init.agents.size(); ++i) init.agents[i].last_power = init.frame0.P[i];
    return init;
}

network::CommGraph build_run_graph(const ValidatedParams& vp) {
    Rng rng = make_stream(vp.params.seed, Stream::Graph);
    return network::build_graph(vp.N(), vp.params.topology, rng);
}

StepFrame step(std::vector<AgentRecord>& agents, const network::CommGraph& graph, const ValidatedParams& vp, Rng& rng,
               const StepFrame& prev) {
    StepFrame next;
    std::vector<int> sums;
    step_into(agents, graph, vp, rng, prev, next, sums);
    return next;
}

namespace {

std::vector<double> make_genes(const ValidatedParams& vp) {
    Rng rng = make_stream(vp.params.seed, Stream::Genes);
    return decision::init_genes(vp.N(), rng);
}

}  // namespace

Simulation::Simulation(const ValidatedParams& vp)
    : vp_(vp),
      graph_(build_run_graph(vp)),
      genes_(make_genes(vp)),
      dynamics_(make_stream(vp.params.seed, Stream::Dynamics)) {
    Rng init_rng = make_stream(vp.params.seed, Stream::InitialResistors);
    InitialState init = init_state(vp_, genes_, init_rng);
    agents_ = std::move(init.agents);
    frame_ = std::move(init.frame0);
}

void Simulation::advance() {
    StepFrame next;
    // Swap buffers instead of reallocating every round.
    std::swap(next, scratch_);
    step_into(agents_, graph_, vp_, dynamics_, frame_, next, inbox_sums_);
    std::swap(frame_, next);
    std::swap(scratch_, next);
}

Simulation run_streaming(const ValidatedParams& vp, const FrameObserver& observer) {
    Simulation sim(vp);
    if (observer) observer(sim.frame());
    for (int t = 0; t < vp.params.steps; ++t) {
        sim.advance();
        if (observer) observer(sim.frame());
    }
    return sim;
}

RunResult run(const ValidatedParams& vp) {
    RunResult result;
    result.params = vp;
    result.frames.reserve(static_cast<std::size_t>(vp.params.steps) + 1);
    Simulation sim = run_streaming(vp, [&](const StepFrame& f) { result.frames.push_back(f); });
    result.genes = sim.genes();
    result.graph = sim.graph();
    return result;
}

}  // namespace layersim::engine
