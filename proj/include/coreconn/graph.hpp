#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coreconn/node_set.hpp"

namespace coreconn {

/// Immutable simple undirected graph. Nodes carry external labels (arbitrary
/// integer or token strings); internally they are compacted to 0..n-1 in
/// label order, so "ascending compact index" and "ascending label" coincide.
/// Adjacency lists are sorted; no self-loops, no duplicate edges.
class Graph {
public:
    Graph() = default;

    NodeId node_count() const { return static_cast<NodeId>(offsets_.empty() ? 0 : offsets_.size() - 1); }
    std::uint64_t edge_count() const { return adj_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId v) const;
    std::uint32_t degree(NodeId v) const;

    const std::string& label(NodeId v) const;
    std::optional<NodeId> node_by_label(const std::string& label) const;
    /// Throwing variant for callers that treat a missing label as an error.
    NodeId require_label(const std::string& label) const;

    bool has_edge(NodeId u, NodeId v) const;

    NodeSet all_nodes() const { return NodeSet::full(node_count()); }

private:
    friend struct GraphBuilder;
    std::vector<std::uint64_t> offsets_;  // size n+1
    std::vector<NodeId> adj_;             // size 2e, sorted within each node
    std::vector<std::string> labels_;     // compact index -> external label
    std::unordered_map<std::string, NodeId> index_;
};

struct GraphBuildResult {
    Graph graph;
    std::uint64_t self_loops_dropped = 0;
    std::uint64_t duplicate_edges_dropped = 0;
};

/// Build a graph from unordered label pairs. Self-loops are dropped (the node
/// itself is kept, isolated), duplicate edges are collapsed; both are counted.
GraphBuildResult build_graph(std::span<const std::pair<std::string, std::string>> edges);

/// Convenience overload for integer-labelled edges (tests, generators).
GraphBuildResult build_graph(std::span<const std::pair<std::int64_t, std::int64_t>> edges);
Graph graph_from_edges(std::initializer_list<std::pair<std::int64_t, std::int64_t>> edges);

/// Label comparison used for compaction: all-digit labels order numerically
/// and before tokens; tokens order lexicographically.
bool label_less(const std::string& a, const std::string& b);

/// BFS distances from `sources` inside the induced graph G(restrict).
/// Nodes outside `restrict` or unreachable map to kInfDistance.
/// Requires sources to be a subset of restrict.
std::vector<Distance> bfs_distances(const Graph& g, const NodeSet& restrict, const NodeSet& sources);

/// Connected components of G(restrict), ordered by minimum compact index.
std::vector<NodeSet> connected_components(const Graph& g, const NodeSet& restrict);

/// Max pairwise distance within G(A); kInfDistance when G(A) is disconnected.
/// A must be non-empty.
Distance induced_diameter(const Graph& g, const NodeSet& a);

/// Early-exit test for induced_diameter(g, a) <= 2. Scans candidate start
/// nodes in ascending induced-degree order so that a violating node is found
/// cheaply. `touches` (optional) accumulates inspected adjacency entries.
bool induced_diameter_at_most_two(const Graph& g, const NodeSet& a, std::uint64_t* touches = nullptr);

/// Induced subgraph G(A) as a standalone graph; labels are preserved.
Graph induced_subgraph(const Graph& g, const NodeSet& a);

}  // namespace coreconn
