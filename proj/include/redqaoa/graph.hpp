#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "redqaoa/rng.hpp"

namespace redqaoa {

/// Undirected simple graph over dense 0-based node indices. Nodes are
/// qubits and edges are MaxCut clauses. Immutable after construction and
/// safe to share across threads. No size cap here: graphs far beyond the
/// simulation guard must stay representable for reduction-only use.
class Graph {
  public:
    using Edge = std::pair<std::uint32_t, std::uint32_t>;

    Graph() = default;

    /// Edges are normalized to (u < v), sorted and deduplicated.
    /// Throws on self-loops or endpoints >= node_count.
    Graph(std::uint32_t node_count, std::vector<Edge> edges);

    std::uint32_t node_count() const { return node_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Neighbors of u, sorted ascending.
    const std::vector<std::uint32_t>& neighbors(std::uint32_t u) const {
        return adjacency_[u];
    }

    std::uint32_t degree(std::uint32_t u) const {
        return static_cast<std::uint32_t>(adjacency_[u].size());
    }

    bool has_edge(std::uint32_t u, std::uint32_t v) const;

    /// FNV-1a over node count and the sorted edge list.
    std::uint64_t fingerprint() const;

  private:
    std::uint32_t node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::uint32_t>> adjacency_;
};

/// Ordered subset of the nodes of a parent graph. Members are kept
/// sorted ascending; member i of the induced subgraph is node members[i]
/// of the parent, which is the relabeling side map for reporting.
struct NodeSubset {
    std::vector<std::uint32_t> members;
    std::uint32_t parent_node_count = 0;

    NodeSubset() = default;
    NodeSubset(std::vector<std::uint32_t> nodes, std::uint32_t parent_count);

    std::size_t size() const { return members.size(); }
    bool operator==(const NodeSubset& other) const {
        return members == other.members &&
               parent_node_count == other.parent_node_count;
    }
};

struct DegreeSummary {
    double average_node_degree = 0.0;
    std::vector<std::uint32_t> degree_sequence;
};

/// Parses the edge-list format: one `u v` pair per line, optional
/// `n <count>` header, `#` comments and blank lines ignored. Duplicate
/// edges collapse silently; self-loops and malformed tokens throw
/// ParseError with the offending line number.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

/// Serializes in the same format (with an `n <count>` header so isolated
/// nodes round-trip).
std::string to_edge_list(const Graph& g);

/// G(n, p): each unordered pair included independently with the given
/// probability. Identical output for identical seeds on every platform.
Graph generate_erdos_renyi(std::uint32_t n, double edge_probability,
                           std::uint64_t seed);

Graph generate_cycle(std::uint32_t n);

/// 2|E| / n.
double average_node_degree(const Graph& g);

DegreeSummary degree_summary(const Graph& g);

/// Nodes relabeled 0..|s|-1 preserving the subset order; an edge is kept
/// iff both endpoints are members.
Graph induced_subgraph(const Graph& g, const NodeSubset& s);

bool is_connected(const Graph& g);

/// Seeded random-growth subset: start at a random node, repeatedly add a
/// uniformly chosen frontier neighbor. The induced subgraph is connected
/// by construction.
NodeSubset random_connected_subset(const Graph& g, std::uint32_t k,
                                   std::uint64_t seed);
NodeSubset random_connected_subset(const Graph& g, std::uint32_t k,
                                   Xoshiro256ss& rng);

/// Single-node swap move: replaces one member with a frontier node and
/// retries until the induced subgraph stays connected. Throws Error once
/// the retry budget is exhausted (caller keeps the current subset).
NodeSubset neighbor_subset(const NodeSubset& current, const Graph& g,
                           Xoshiro256ss& rng, int retry_budget = 32);

/// All size-k subsets with connected induced subgraph, each exactly once,
/// in deterministic order (ESU enumeration). Guarded against blowup:
/// refuses node_count > max_nodes unless the caller raises the limit.
std::vector<NodeSubset> enumerate_connected_subsets(const Graph& g,
                                                    std::uint32_t k,
                                                    std::uint32_t max_nodes = 16);

} // namespace redqaoa
