#include "redqaoa/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "redqaoa/common.hpp"

namespace redqaoa {

Graph::Graph(std::uint32_t node_count, std::vector<Edge> edges)
    : node_count_(node_count) {
    for (auto& [u, v] : edges) {
        if (u == v)
            throw Error("self-loop on node " + std::to_string(u));
        if (u >= node_count_ || v >= node_count_)
            throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") exceeds node count " + std::to_string(node_count_));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adjacency_.resize(node_count_);
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
    if (u >= node_count_ || v >= node_count_) return false;
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::uint64_t Graph::fingerprint() const {
    std::uint64_t h = fnv1a(&node_count_, sizeof(node_count_));
    for (const auto& [u, v] : edges_) {
        h = fnv1a(&u, sizeof(u), h);
        h = fnv1a(&v, sizeof(v), h);
    }
    return h;
}

NodeSubset::NodeSubset(std::vector<std::uint32_t> nodes,
                       std::uint32_t parent_count)
    : members(std::move(nodes)), parent_node_count(parent_count) {
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] >= parent_node_count)
            throw Error("subset member " + std::to_string(members[i]) +
                        " out of range for parent with " +
                        std::to_string(parent_node_count) + " nodes");
        if (i > 0 && members[i] == members[i - 1])
            throw Error("duplicate subset member " + std::to_string(members[i]));
    }
}

Graph load_edge_list(std::istream& in) {
    std::vector<Graph::Edge> edges;
    std::uint32_t declared_n = 0;
    bool have_header = false;
    std::uint32_t max_index = 0;
    bool saw_node = false;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank or comment-only

        if (first == "n") {
            long long n = -1;
            if (!(ls >> n) || n < 1)
                throw ParseError("invalid node-count header", line_no);
            std::string extra;
            if (ls >> extra) throw ParseError("trailing tokens after header", line_no);
            declared_n = static_cast<std::uint32_t>(n);
            have_header = true;
            continue;
        }

        long long u = 0, v = 0;
        std::istringstream es(line);
        std::string extra;
        if (!(es >> u >> v) || u < 0 || v < 0)
            throw ParseError("expected two nonnegative integers", line_no);
        if (es >> extra) throw ParseError("trailing tokens after edge", line_no);
        if (u == v) throw ParseError("self-loop on node " + std::to_string(u), line_no);

        edges.emplace_back(static_cast<std::uint32_t>(u),
                           static_cast<std::uint32_t>(v));
        max_index = std::max({max_index, static_cast<std::uint32_t>(u),
                              static_cast<std::uint32_t>(v)});
        saw_node = true;
    }

    std::uint32_t n = have_header ? declared_n : (saw_node ? max_index + 1 : 0);
    if (have_header && saw_node && max_index >= declared_n)
        throw Error("edge index " + std::to_string(max_index) +
                    " exceeds declared node count " + std::to_string(declared_n));
    return Graph(n, std::move(edges));
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return load_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.node_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph generate_erdos_renyi(std::uint32_t n, double edge_probability,
                           std::uint64_t seed) {
    if (n < 1) throw Error("node count must be >= 1");
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
        throw Error("edge probability must lie in [0, 1]");
    Xoshiro256ss rng(seed);
    std::vector<Graph::Edge> edges;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (rng.uniform() < edge_probability) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph generate_cycle(std::uint32_t n) {
    if (n < 3) throw Error("cycle needs at least 3 nodes");
    std::vector<Graph::Edge> edges;
    edges.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

double average_node_degree(const Graph& g) {
    if (g.node_count() == 0) throw Error("empty graph has no average degree");
    return 2.0 * static_cast<double>(g.edge_count()) /
           static_cast<double>(g.node_count());
}

DegreeSummary degree_summary(const Graph& g) {
    DegreeSummary s;
    s.average_node_degree = average_node_degree(g);
    s.degree_sequence.reserve(g.node_count());
    for (std::uint32_t u = 0; u < g.node_count(); ++u)
        s.degree_sequence.push_back(g.degree(u));
    return s;
}

Graph induced_subgraph(const Graph& g, const NodeSubset& s) {
    if (s.parent_node_count != g.node_count())
        throw Error("subset built for a different parent graph");
    std::vector<std::int64_t> new_index(g.node_count(), -1);
    for (std::size_t i = 0; i < s.members.size(); ++i)
        new_index[s.members[i]] = static_cast<std::int64_t>(i);

    std::vector<Graph::Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        const auto nu = new_index[u], nv = new_index[v];
        if (nu >= 0 && nv >= 0)
            edges.emplace_back(static_cast<std::uint32_t>(nu),
                               static_cast<std::uint32_t>(nv));
    }
    return Graph(static_cast<std::uint32_t>(s.members.size()), std::move(edges));
}

namespace {

// BFS reachability count from node 0 over an implicit member-filtered view.
// in_set empty means "all nodes of g".
std::uint32_t reachable_count(const Graph& g,
                              const std::vector<std::uint32_t>& members,
                              const std::vector<char>& in_set) {
    if (members.empty()) return 0;
    std::vector<char> seen(g.node_count(), 0);
    std::vector<std::uint32_t> stack{members[0]};
    seen[members[0]] = 1;
    std::uint32_t found = 0;
    while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        ++found;
        for (const auto v : g.neighbors(u)) {
            if (seen[v] || (!in_set.empty() && !in_set[v])) continue;
            seen[v] = 1;
            stack.push_back(v);
        }
    }
    return found;
}

bool subset_connected(const Graph& g, const std::vector<std::uint32_t>& members,
                      std::vector<char>& in_set_scratch) {
    std::fill(in_set_scratch.begin(), in_set_scratch.end(), 0);
    for (const auto m : members) in_set_scratch[m] = 1;
    return reachable_count(g, members, in_set_scratch) == members.size();
}

} // namespace

bool is_connected(const Graph& g) {
    if (g.node_count() == 0) throw Error("connectivity undefined for empty graph");
    std::vector<std::uint32_t> all(g.node_count());
    for (std::uint32_t i = 0; i < g.node_count(); ++i) all[i] = i;
    return reachable_count(g, all, {}) == g.node_count();
}

NodeSubset random_connected_subset(const Graph& g, std::uint32_t k,
                                   Xoshiro256ss& rng) {
    if (k < 1 || k > g.node_count())
        throw Error("subset size " + std::to_string(k) + " out of range");
    if (!is_connected(g)) throw Error("graph must be connected");

    std::vector<char> in_set(g.node_count(), 0);
    std::vector<char> in_frontier(g.node_count(), 0);
    std::vector<std::uint32_t> members;
    std::vector<std::uint32_t> frontier;

    const auto start =
        static_cast<std::uint32_t>(rng.uniform_int(g.node_count()));
    members.push_back(start);
    in_set[start] = 1;
    for (const auto v : g.neighbors(start)) {
        in_frontier[v] = 1;
        frontier.push_back(v);
    }

    while (members.size() < k) {
        const auto pick = rng.uniform_int(frontier.size());
        const auto u = frontier[pick];
        frontier[pick] = frontier.back();
        frontier.pop_back();
        in_frontier[u] = 0;
        members.push_back(u);
        in_set[u] = 1;
        for (const auto v : g.neighbors(u)) {
            if (!in_set[v] && !in_frontier[v]) {
                in_frontier[v] = 1;
                frontier.push_back(v);
            }
        }
    }
    return NodeSubset(std::move(members), g.node_count());
}

NodeSubset random_connected_subset(const Graph& g, std::uint32_t k,
                                   std::uint64_t seed) {
    Xoshiro256ss rng(seed);
    return random_connected_subset(g, k, rng);
}

NodeSubset neighbor_subset(const NodeSubset& current, const Graph& g,
                           Xoshiro256ss& rng, int retry_budget) {
    if (current.parent_node_count != g.node_count())
        throw Error("subset built for a different parent graph");
    if (current.size() < 1 || current.size() >= g.node_count())
        throw Error("swap move needs 1 <= |subset| < node count");

    std::vector<char> in_set(g.node_count(), 0);
    for (const auto m : current.members) in_set[m] = 1;

    // Frontier: nodes outside the subset adjacent to it. Adding any of
    // them keeps connectivity; only the removal can break it.
    std::vector<std::uint32_t> frontier;
    {
        std::vector<char> seen(g.node_count(), 0);
        for (const auto m : current.members)
            for (const auto v : g.neighbors(m))
                if (!in_set[v] && !seen[v]) {
                    seen[v] = 1;
                    frontier.push_back(v);
                }
    }
    if (frontier.empty())
        throw Error("no neighboring subsets: subset has empty frontier");

    std::vector<std::uint32_t> candidate(current.members.size());
    std::vector<char> scratch(g.node_count(), 0);
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        const auto add = frontier[rng.uniform_int(frontier.size())];
        const auto drop_pos = rng.uniform_int(current.members.size());
        candidate.clear();
        for (std::size_t i = 0; i < current.members.size(); ++i)
            if (i != drop_pos) candidate.push_back(current.members[i]);
        candidate.push_back(add);
        if (subset_connected(g, candidate, scratch))
            return NodeSubset(candidate, g.node_count());
    }
    throw Error("no connected neighbor found within retry budget");
}

namespace {

// Wernicke's ESU: each connected induced k-subgraph is reached exactly
// once by growing from its minimum node using only exclusive neighbors.
struct EsuState {
    const Graph& g;
    std::uint32_t k;
    std::uint32_t root;
    std::vector<std::uint32_t> subset;
    std::vector<char> marked; // in subset or already adjacent to it
    std::vector<NodeSubset>& out;

    void extend(std::vector<std::uint32_t> extension) {
        if (subset.size() == k) {
            out.emplace_back(subset, g.node_count());
            return;
        }
        while (!extension.empty()) {
            const auto w = extension.front();
            extension.erase(extension.begin());

            std::vector<std::uint32_t> grown = extension;
            std::vector<std::uint32_t> newly_marked;
            for (const auto u : g.neighbors(w)) {
                if (u > root && !marked[u]) {
                    marked[u] = 1;
                    newly_marked.push_back(u);
                    grown.push_back(u);
                }
            }
            std::sort(grown.begin(), grown.end());

            subset.push_back(w);
            extend(std::move(grown));
            subset.pop_back();

            for (const auto u : newly_marked) marked[u] = 0;
        }
    }
};

} // namespace

std::vector<NodeSubset> enumerate_connected_subsets(const Graph& g,
                                                    std::uint32_t k,
                                                    std::uint32_t max_nodes) {
    if (g.node_count() > max_nodes)
        throw Error("enumeration guard: graph has " +
                    std::to_string(g.node_count()) + " nodes (limit " +
                    std::to_string(max_nodes) + "); raise max_nodes to override");
    if (k < 1 || k > g.node_count())
        throw Error("subset size " + std::to_string(k) + " out of range");

    std::vector<NodeSubset> out;
    for (std::uint32_t v = 0; v < g.node_count(); ++v) {
        EsuState state{g, k, v, {v}, std::vector<char>(g.node_count(), 0), out};
        state.marked[v] = 1;
        std::vector<std::uint32_t> extension;
        for (const auto u : g.neighbors(v))
            if (u > v) {
                state.marked[u] = 1;
                extension.push_back(u);
            }
        state.extend(std::move(extension));
    }
    return out;
}

} // namespace redqaoa
