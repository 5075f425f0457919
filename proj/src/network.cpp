#include "layersim/network.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

namespace layersim::network {

CommGraph::CommGraph(int node_count, std::span<const std::pair<int, int>> edges) {
    if (node_count < 1) throw std::invalid_argument("CommGraph: node count must be >= 1");
    adjacency_.resize(static_cast<std::size_t>(node_count));
    for (auto [i, j] : edges) {
        if (i < 0 || j < 0 || i >= node_count || j >= node_count)
            throw std::invalid_argument("CommGraph: node id out of range");
        if (i == j) throw std::invalid_argument("CommGraph: self-loop at node " + std::to_string(i));
        adjacency_[static_cast<std::size_t>(i)].push_back(j);
        adjacency_[static_cast<std::size_t>(j)].push_back(i);
    }
    for (std::size_t i = 0; i < adjacency_.size(); ++i) {
        auto& nbrs = adjacency_[i];
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw std::invalid_argument("CommGraph: duplicate edge at node " + std::to_string(i));
        if (nbrs.empty()) throw std::invalid_argument("CommGraph: node " + std::to_string(i) + " is isolated");
    }
    edge_count_ = edges.size();
}

std::vector<std::pair<int, int>> CommGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int i = 0; i < size(); ++i)
        for (int j : neighbors(i))
            if (i < j) out.emplace_back(i, j);
    return out;
}

CommGraph build_ring(int N) {
    if (N < 3) throw std::domain_error("build_ring: N must be >= 3, got " + std::to_string(N));
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) edges.emplace_back(i, (i + 1) % N);
    return CommGraph(N, edges);
}

CommGraph build_watts_strogatz(int N, int K, double beta, Rng& rng) {
    if (K <= 0 || K % 2 != 0) throw std::domain_error("build_watts_strogatz: K must be positive and even");
    if (K >= N) throw std::domain_error("build_watts_strogatz: K must be < N");
    if (!(beta >= 0.0 && beta <= 1.0)) throw std::domain_error("build_watts_strogatz: beta must lie in [0, 1]");

    std::vector<std::set<int>> adj(static_cast<std::size_t>(N));
    auto link = [&](int u, int v) {
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
    };
    auto unlink = [&](int u, int v) {
        adj[static_cast<std::size_t>(u)].erase(v);
        adj[static_cast<std::size_t>(v)].erase(u);
    };

    const int half = K / 2;
    for (int u = 0; u < N; ++u)
        for (int k = 1; k <= half; ++k) link(u, (u + k) % N);

    std::vector<int> candidates;
    candidates.reserve(static_cast<std::size_t>(N));
    for (int k = 1; k <= half; ++k) {
        for (int u = 0; u < N; ++u) {
            if (!rng.bernoulli(beta)) continue;
            const auto& nbrs = adj[static_cast<std::size_t>(u)];
            candidates.clear();
            for (int w = 0; w < N; ++w)
                if (w != u && !nbrs.contains(w)) candidates.push_back(w);
            if (candidates.empty()) continue;
            const int w = candidates[rng.uniform_index(candidates.size())];
            unlink(u, (u + k) % N);
            link(u, w);
        }
    }

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < N; ++u)
        for (int v : adj[static_cast<std::size_t>(u)])
            if (u < v) edges.emplace_back(u, v);
    return CommGraph(N, edges);
}

CommGraph build_barabasi_albert(int N, int m, Rng& rng) {
    if (m < 1) throw std::domain_error("build_barabasi_albert: m must be >= 1");
    if (m >= N) throw std::domain_error("build_barabasi_albert: m must be < N");

    std::vector<std::pair<int, int>> edges;
    // Each node appears once per incident edge, so a uniform pick from this
    // list is a degree-proportional pick.
    std::vector<int> endpoints;
    for (int i = 0; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) {
            edges.emplace_back(i, j);
            endpoints.push_back(i);
            endpoints.push_back(j);
        }

    std::vector<int> targets;
    for (int v = m + 1; v < N; ++v) {
        targets.clear();
        // Redrawing on a repeat is sequential sampling without replacement.
        while (static_cast<int>(targets.size()) < m) {
            const int cand = endpoints[rng.uniform_index(endpoints.size())];
            if (std::find(targets.begin(), targets.end(), cand) == targets.end()) targets.push_back(cand);
        }
        for (int t : targets) {
            edges.emplace_back(t, v);
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return CommGraph(N, edges);
}

CommGraph build_graph(int N, const TopologySpec& topo, Rng& rng) {
    switch (topo.kind) {
        case TopologyKind::Ring: return build_ring(N);
        case TopologyKind::WattsStrogatz: return build_watts_strogatz(N, topo.ws_K, topo.ws_beta, rng);
        case TopologyKind::BarabasiAlbert: return build_barabasi_albert(N, topo.ba_m, rng);
    }
    throw std::invalid_argument("build_graph: unknown topology");
}

void write_edge_list(std::ostream& out, const CommGraph& graph) {
    for (auto [i, j] : graph.edges()) out << i << ' ' << j << '\n';
}

AgentStrategy transmit(AgentStrategy true_state, double p_err, Rng& rng) {
    if (!(rng.uniform01() < p_err)) return true_state;
    // The two other symbols, in ascending order.
    static constexpr AgentStrategy others[3][2] = {
        {AgentStrategy::Ignore, AgentStrategy::Defect},     // from Cooperate
        {AgentStrategy::Cooperate, AgentStrategy::Defect},  // from Ignore
        {AgentStrategy::Cooperate, AgentStrategy::Ignore},  // from Defect
    };
    const int row = to_int(true_state) + 1;
    return others[row][rng.uniform01() < 0.5 ? 0 : 1];
}

Inbox broadcast(std::span<const AgentStrategy> states, const CommGraph& graph, double p_err, Rng& rng) {
    if (static_cast<int>(states.size()) != graph.size())
        throw std::invalid_argument("broadcast: state vector size differs from graph size");
    Inbox inbox(states.size());
    for (int i = 0; i < graph.size(); ++i) {
        auto& box = inbox[static_cast<std::size_t>(i)];
        box.reserve(static_cast<std::size_t>(graph.degree(i)));
        for (int j : graph.neighbors(i))
            box.push_back({j, transmit(states[static_cast<std::size_t>(j)], p_err, rng)});
    }
    return inbox;
}

void broadcast_sums(std::span<const AgentStrategy> states, const CommGraph& graph, double p_err, Rng& rng,
                    std::vector<int>& sums) {
    if (static_cast<int>(states.size()) != graph.size())
        throw std::invalid_argument("broadcast_sums: state vector size differs from graph size");
    sums.assign(states.size(), 0);
    for (int i = 0; i < graph.size(); ++i) {
        int s = 0;
        for (int j : graph.neighbors(i)) s += to_int(transmit(states[static_cast<std::size_t>(j)], p_err, rng));
        sums[static_cast<std::size_t>(i)] = s;
    }
}

}  // namespace layersim::network
