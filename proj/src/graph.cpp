#include "coreconn/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace coreconn {

namespace {

bool is_all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

bool label_less(const std::string& a, const std::string& b) {
    const bool na = is_all_digits(a);
    const bool nb = is_all_digits(b);
    if (na != nb) return na;  // numeric labels sort first
    if (na && nb) {
        // numeric compare without overflow: strip leading zeros, then
        // shorter-is-smaller, then lexicographic; full string breaks ties
        // between representations of the same value ("07" vs "7").
        const std::size_t pa = std::min(a.find_first_not_of('0'), a.size() - 1);
        const std::size_t pb = std::min(b.find_first_not_of('0'), b.size() - 1);
        const std::size_t la = a.size() - pa;
        const std::size_t lb = b.size() - pb;
        if (la != lb) return la < lb;
        const int c = a.compare(pa, la, b, pb, lb);
        if (c != 0) return c < 0;
        return a < b;
    }
    return a < b;
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
    if (v >= node_count()) throw std::out_of_range("Graph::neighbors: unknown node");
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
}

std::uint32_t Graph::degree(NodeId v) const {
    if (v >= node_count()) throw std::out_of_range("Graph::degree: unknown node");
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
}

const std::string& Graph::label(NodeId v) const {
    if (v >= node_count()) throw std::out_of_range("Graph::label: unknown node");
    return labels_[v];
}

std::optional<NodeId> Graph::node_by_label(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

NodeId Graph::require_label(const std::string& label) const {
    auto v = node_by_label(label);
    if (!v) throw std::out_of_range("Graph: unknown label '" + label + "'");
    return *v;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

struct GraphBuilder {
    static GraphBuildResult build(std::span<const std::pair<std::string, std::string>> edges) {
        GraphBuildResult result;

        std::vector<std::string> labels;
        labels.reserve(edges.size() / 2 + 1);
        for (const auto& [a, b] : edges) {
            labels.push_back(a);
            labels.push_back(b);
        }
        std::sort(labels.begin(), labels.end(), label_less);
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

        Graph& g = result.graph;
        g.labels_ = std::move(labels);
        g.index_.reserve(g.labels_.size() * 2);
        for (NodeId i = 0; i < g.labels_.size(); ++i) g.index_.emplace(g.labels_[i], i);

        const NodeId n = static_cast<NodeId>(g.labels_.size());
        std::vector<std::pair<NodeId, NodeId>> pairs;
        pairs.reserve(edges.size());
        for (const auto& [a, b] : edges) {
            const NodeId u = g.index_.at(a);
            const NodeId v = g.index_.at(b);
            if (u == v) {
                ++result.self_loops_dropped;  // node stays, isolated
                continue;
            }
            pairs.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(pairs.begin(), pairs.end());
        const auto unique_end = std::unique(pairs.begin(), pairs.end());
        result.duplicate_edges_dropped = static_cast<std::uint64_t>(pairs.end() - unique_end);
        pairs.erase(unique_end, pairs.end());

        std::vector<std::uint64_t> deg(n, 0);
        for (const auto& [u, v] : pairs) {
            ++deg[u];
            ++deg[v];
        }
        g.offsets_.assign(n + 1, 0);
        for (NodeId v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
        g.adj_.resize(pairs.size() * 2);
        std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
        for (const auto& [u, v] : pairs) {
            g.adj_[cursor[u]++] = v;
            g.adj_[cursor[v]++] = u;
        }
        // pairs were sorted, so each adjacency list is already ascending
        return result;
    }
};

GraphBuildResult build_graph(std::span<const std::pair<std::string, std::string>> edges) {
    return GraphBuilder::build(edges);
}

GraphBuildResult build_graph(std::span<const std::pair<std::int64_t, std::int64_t>> edges) {
    std::vector<std::pair<std::string, std::string>> as_labels;
    as_labels.reserve(edges.size());
    for (const auto& [a, b] : edges) as_labels.emplace_back(std::to_string(a), std::to_string(b));
    return GraphBuilder::build(as_labels);
}

Graph graph_from_edges(std::initializer_list<std::pair<std::int64_t, std::int64_t>> edges) {
    std::vector<std::pair<std::int64_t, std::int64_t>> v(edges);
    return build_graph(std::span<const std::pair<std::int64_t, std::int64_t>>(v)).graph;
}

std::vector<Distance> bfs_distances(const Graph& g, const NodeSet& restrict, const NodeSet& sources) {
    for (NodeId s : sources)
        if (!restrict.contains(s)) throw std::invalid_argument("bfs_distances: sources must lie inside restrict");

    std::vector<Distance> dist(g.node_count(), kInfDistance);
    std::deque<NodeId> queue;
    for (NodeId s : sources) {
        dist[s] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        const NodeId v = queue.front();
        queue.pop_front();
        for (NodeId w : g.neighbors(v)) {
            if (!restrict.contains(w) || dist[w] != kInfDistance) continue;
            dist[w] = dist[v] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

std::vector<NodeSet> connected_components(const Graph& g, const NodeSet& restrict) {
    std::vector<NodeSet> components;
    std::vector<char> seen(g.node_count(), 0);
    std::vector<NodeId> stack;
    for (NodeId start : restrict) {  // ascending, so components come out by minimum index
        if (seen[start]) continue;
        std::vector<NodeId> members;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            const NodeId v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (NodeId w : g.neighbors(v)) {
                if (!restrict.contains(w) || seen[w]) continue;
                seen[w] = 1;
                stack.push_back(w);
            }
        }
        components.push_back(NodeSet::from_nodes(g.node_count(), std::move(members)));
    }
    return components;
}

Distance induced_diameter(const Graph& g, const NodeSet& a) {
    if (a.empty()) throw std::invalid_argument("induced_diameter: empty node set");
    Distance diameter = 0;
    for (NodeId start : a) {
        NodeSet source(g.node_count());
        source.insert(start);
        const auto dist = bfs_distances(g, a, source);
        for (NodeId v : a) {
            if (dist[v] == kInfDistance) return kInfDistance;
            diameter = std::max(diameter, dist[v]);
        }
    }
    return diameter;
}

bool induced_diameter_at_most_two(const Graph& g, const NodeSet& a, std::uint64_t* touches) {
    if (a.empty()) throw std::invalid_argument("induced_diameter_at_most_two: empty node set");
    std::uint64_t local = 0;

    std::vector<std::pair<std::uint32_t, NodeId>> order;  // (induced degree, node)
    order.reserve(a.size());
    for (NodeId v : a) {
        std::uint32_t d = 0;
        for (NodeId w : g.neighbors(v)) {
            ++local;
            if (a.contains(w)) ++d;
        }
        order.emplace_back(d, v);
    }
    std::sort(order.begin(), order.end());  // low-degree nodes fail fastest

    std::vector<std::uint32_t> mark(g.node_count(), 0);
    std::uint32_t stamp = 0;
    bool ok = true;
    for (const auto& [unused_degree, x] : order) {
        ++stamp;
        std::size_t reached = 1;
        mark[x] = stamp;
        for (NodeId y : g.neighbors(x)) {
            ++local;
            if (!a.contains(y) || mark[y] == stamp) continue;
            mark[y] = stamp;
            ++reached;
        }
        for (NodeId y : g.neighbors(x)) {
            if (!a.contains(y)) continue;
            for (NodeId z : g.neighbors(y)) {
                ++local;
                if (!a.contains(z) || mark[z] == stamp) continue;
                mark[z] = stamp;
                ++reached;
            }
        }
        if (reached != a.size()) {
            ok = false;
            break;
        }
    }
    if (touches) *touches += local;
    return ok;
}

Graph induced_subgraph(const Graph& g, const NodeSet& a) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (NodeId u : a)
        for (NodeId v : g.neighbors(u))
            if (v > u && a.contains(v)) edges.emplace_back(g.label(u), g.label(v));
    // members with no induced edge survive as self-loops the builder drops
    for (NodeId u : a) edges.emplace_back(g.label(u), g.label(u));
    GraphBuildResult built = build_graph(std::span<const std::pair<std::string, std::string>>(edges));
    return std::move(built.graph);
}

}  // namespace coreconn
