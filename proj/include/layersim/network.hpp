#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "layersim/core.hpp"
#include "layersim/rng.hpp"

namespace layersim::network {

/// Undirected simple graph over agent ids 0..N-1. Neighbour lists are sorted.
class CommGraph {
public:
    CommGraph() = default;

    /// Builds from an edge list. Throws std::invalid_argument on self-loops,
    /// duplicate edges, out-of-range ids, or isolated nodes.
    CommGraph(int node_count, std::span<const std::pair<int, int>> edges);

    int size() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::span<const int> neighbors(int i) const { return adjacency_.at(static_cast<std::size_t>(i)); }
    int degree(int i) const { return static_cast<int>(neighbors(i).size()); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    /// Every edge once as (i, j) with i < j, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const CommGraph&) const = default;

private:
    std::vector<std::vector<int>> adjacency_;
    std::size_t edge_count_ = 0;
};

CommGraph build_ring(int N);

/// Ring lattice with K/2 neighbours per side, then each clockwise lattice edge
/// (i, i+k) has its far endpoint rewired with probability beta to a uniformly
/// chosen node that is neither i nor already adjacent to i.
CommGraph build_watts_strogatz(int N, int K, double beta, Rng& rng);

/// Preferential attachment seeded with the complete graph on m+1 nodes; each
/// later node links to m distinct existing nodes with probability k_j / sum k.
CommGraph build_barabasi_albert(int N, int m, Rng& rng);

/// Dispatches on the topology kind. rng is only consumed by random graphs.
CommGraph build_graph(int N, const TopologySpec& topo, Rng& rng);

/// "i j" per line, 0-indexed, each undirected edge once with i < j.
void write_edge_list(std::ostream& out, const CommGraph& graph);

/// Sends one strategy symbol through the noisy channel. With probability
/// p_err the symbol is replaced by one of the two other symbols, each
/// equally likely. Consumes exactly one draw, plus one more on corruption.
AgentStrategy transmit(AgentStrategy true_state, double p_err, Rng& rng);

/// One received message.
struct Message {
    int sender;
    AgentStrategy received;
};

/// Per-receiver list of messages, one per incoming edge direction.
using Inbox = std::vector<std::vector<Message>>;

/// Every node sends its state to every neighbour over an independent channel.
/// Draw order: receivers ascending, senders ascending within a receiver.
Inbox broadcast(std::span<const AgentStrategy> states, const CommGraph& graph, double p_err, Rng& rng);

/// Same traffic as broadcast, reduced to the per-receiver sum of received
/// symbol values. Consumes the random stream identically.
void broadcast_sums(std::span<const AgentStrategy> states, const CommGraph& graph, double p_err, Rng& rng,
                    std::vector<int>& sums);

}  // namespace layersim::network
