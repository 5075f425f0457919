#include <doctest.h>

#include <cmath>
#include <limits>

#include "layersim/engine.hpp"
#include "layersim/metrics.hpp"

using namespace layersim;
using namespace layersim::engine;
using decision::AgentRecord;

namespace {

ValidatedParams paper_defaults(int N, int steps, uint64_t seed) {
    SystemParams p;
    p.N = N;
    p.R_V = 2;
    p.R_0 = 200;
    p.V = 1;
    p.lambda_min = 0.0005;
    p.p_err = 0.01;
    p.steps = steps;
    p.seed = seed;
    return validate_params(p);
}

}  // namespace

TEST_CASE("init_state starts below the optimum") {
    for (uint64_t seed = 0; seed < 50; ++seed) {
        const ValidatedParams vp = paper_defaults(20, 10, seed);
        Rng genes_rng(seed);
        const auto genes = decision::init_genes(20, genes_rng);
        Rng rng(seed + 1000);
        const InitialState init = init_state(vp, genes, rng);
        CHECK(init.frame0.n < 20 * 100);
        CHECK(init.frame0.t == 0);
        for (const auto& agent : init.agents) {
            CHECK(agent.a >= 1);
            CHECK(agent.a <= 100);
            CHECK(agent.strategy == AgentStrategy::Ignore);
            CHECK(agent.last_gain < -1e300);
        }
    }
}

TEST_CASE("init_state aborts when mu = 1") {
    SystemParams p;
    p.N = 10;
    p.R_V = 1;
    p.R_0 = 1;
    const ValidatedParams vp = validate_params(p);
    const std::vector<double> genes(10, 0.5);
    Rng rng(1);
    CHECK_THROWS_AS(init_state(vp, genes, rng), InitError);
}

TEST_CASE("init_state is deterministic") {
    const ValidatedParams vp = paper_defaults(30, 10, 3);
    const std::vector<double> genes(30, 0.5);
    Rng a(8), b(8);
    CHECK(init_state(vp, genes, a).frame0 == init_state(vp, genes, b).frame0);
}

TEST_CASE("step leaves a satisfied idle system unchanged") {
    SystemParams p;
    p.N = 6;
    p.p_err = 0.0;
    p.lambda_min = 0.0005;
    const ValidatedParams vp = validate_params(p);
    const network::CommGraph g = network::build_ring(6);

    std::vector<AgentRecord> agents(6);
    for (int i = 0; i < 6; ++i) {
        agents[static_cast<std::size_t>(i)] = {i, 3 + i, AgentStrategy::Ignore, 0.5, 0.0, 0.01};
    }
    StepFrame prev;
    prev.strategies.assign(6, AgentStrategy::Ignore);
    for (const auto& a : agents) prev.a.push_back(a.a);
    prev.n = 3 + 4 + 5 + 6 + 7 + 8;
    prev.a_avg = prev.n / 6.0;
    prev.P = physical::powers(prev.a, physical::Circuit::from(vp));
    for (std::size_t i = 0; i < 6; ++i) agents[i].last_power = prev.P[i];

    Rng rng(1);
    const StepFrame next = step(agents, g, vp, rng, prev);
    CHECK(next.t == 1);
    CHECK(next.a == prev.a);
    CHECK(next.strategies == prev.strategies);
    CHECK(next.P == prev.P);
    for (const auto& a : agents) CHECK(a.last_gain == 0.0);
}

TEST_CASE("golden three-agent round") {
    // mu = 100, P_typ = 0.5, ring 0-1-2, no channel noise.
    SystemParams p;
    p.N = 3;
    p.p_err = 0.0;
    p.lambda_min = 0.0005;
    const ValidatedParams vp = validate_params(p);
    const network::CommGraph g = network::build_ring(3);

    // Agent 0 has a successful Defect streak and keeps it.
    // Agent 1 sees neighbours {+1, +1}: sum 2, gene 0 -> Cooperate.
    // Agent 2 sees neighbours {+1, -1}: sum 0, gene 1 -> Defect.
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<AgentRecord> agents{
        {0, 3, AgentStrategy::Defect, 0.5, 0.0, 0.01},
        {1, 5, AgentStrategy::Cooperate, 0.0, 0.0, -inf},
        {2, 2, AgentStrategy::Defect, 1.0, 0.0, -0.2},
    };
    StepFrame prev;
    prev.strategies = {AgentStrategy::Defect, AgentStrategy::Cooperate, AgentStrategy::Defect};
    prev.a = {3, 5, 2};
    prev.n = 10;
    prev.a_avg = 10.0 / 3.0;
    const double d_prev = (10.0 / 3.0 + 100.0) * (10.0 / 3.0 + 100.0);
    prev.P = {0.5 * 3 * 100 / d_prev, 0.5 * 5 * 100 / d_prev, 0.5 * 2 * 100 / d_prev};
    for (std::size_t i = 0; i < 3; ++i) agents[i].last_power = prev.P[i];

    Rng rng(2024);
    const StepFrame next = step(agents, g, vp, rng, prev);

    CHECK(next.t == 1);
    CHECK(next.strategies ==
          std::vector<AgentStrategy>{AgentStrategy::Defect, AgentStrategy::Cooperate, AgentStrategy::Defect});
    CHECK(next.a == std::vector<int>{4, 4, 3});
    CHECK(next.n == 11);
    CHECK(next.a_avg == doctest::Approx(11.0 / 3.0));
    const double d = (11.0 / 3.0 + 100.0) * (11.0 / 3.0 + 100.0);
    const double expected_P[3] = {0.5 * 4 * 100 / d, 0.5 * 4 * 100 / d, 0.5 * 3 * 100 / d};
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(next.P[i] == doctest::Approx(expected_P[i]).epsilon(1e-14));
        CHECK(agents[i].last_power == next.P[i]);
        CHECK(agents[i].last_gain == doctest::Approx(expected_P[i] / prev.P[i] - 1.0).epsilon(1e-12));
    }
    // (4/3) * (d_prev/d) - 1 for agent 0.
    CHECK(agents[0].last_gain == doctest::Approx(0.32477).epsilon(1e-4));
}

TEST_CASE("run is replayable") {
    const ValidatedParams vp = paper_defaults(10, 100, 42);
    const RunResult a = run(vp);
    const RunResult b = run(vp);
    CHECK(a.frames == b.frames);
    CHECK(a.genes == b.genes);
    CHECK(a.graph == b.graph);
    CHECK(a.frames.size() == 101);
}

TEST_CASE("trace invariants") {
    for (const char* topo : {"ring", "ws:4:0.5", "ba:2"}) {
        SystemParams p = paper_defaults(40, 300, 9).params;
        p.topology = parse_topology_label(topo);
        p.p_err = 0.1;
        const RunResult r = run(validate_params(p));
        const physical::Circuit c = physical::Circuit::from(r.params);
        for (std::size_t t = 0; t < r.frames.size(); ++t) {
            const StepFrame& f = r.frames[t];
            CHECK(f.t == static_cast<int>(t));
            long n = 0;
            for (int a : f.a) {
                CHECK(a >= 1);
                n += a;
            }
            CHECK(f.n == n);
            CHECK(f.n >= 40);
            CHECK(f.a_avg == doctest::Approx(n / 40.0));
            for (std::size_t i = 0; i < f.a.size(); ++i) {
                CHECK_UNARY(to_int(f.strategies[i]) >= -1 && to_int(f.strategies[i]) <= 1);
                CHECK(f.P[i] == physical::power_per_agent(f.a[i], f.n, c));
            }
            if (t > 0)
                for (std::size_t i = 0; i < f.a.size(); ++i) CHECK(std::abs(f.a[i] - r.frames[t - 1].a[i]) <= 1);
        }
    }
}

TEST_CASE("Simulation and free step functions agree") {
    const ValidatedParams vp = paper_defaults(25, 50, 77);
    const RunResult reference = run(vp);

    const network::CommGraph g = build_run_graph(vp);
    Rng genes_rng = make_stream(vp.params.seed, Stream::Genes);
    const auto genes = decision::init_genes(vp.N(), genes_rng);
    Rng init_rng = make_stream(vp.params.seed, Stream::InitialResistors);
    InitialState init = init_state(vp, genes, init_rng);
    Rng dyn = make_stream(vp.params.seed, Stream::Dynamics);
    StepFrame frame = init.frame0;
    CHECK(frame == reference.frames[0]);
    for (int t = 1; t <= 50; ++t) {
        frame = step(init.agents, g, vp, dyn, frame);
        CHECK(frame == reference.frames[static_cast<std::size_t>(t)]);
    }
}

TEST_CASE("a huge threshold keeps the trace bounded") {
    SystemParams p = paper_defaults(20, 500, 5).params;
    p.lambda_min = 10.0;
    const RunResult r = run(validate_params(p));
    for (const auto& f : r.frames)
        for (int a : f.a) {
            CHECK(a >= 1);
            CHECK(a <= 100 + 500);
        }
}

TEST_CASE("long run at paper defaults") {
    const ValidatedParams vp = paper_defaults(100, 5000, 1);
    const RunResult r = run(vp);
    const double c = metrics::avg_cooperation(r.frames, 0);
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
}
