#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "coreconn/core_decomposition.hpp"
#include "coreconn/graph.hpp"

namespace coreconn {

/// Exact edge connectivity between u and v inside G(restrict): unit-capacity
/// max-flow via shortest augmenting paths. 0 when disconnected. Throws when
/// u == v or an endpoint is outside restrict.
std::uint32_t edge_connectivity_pair(const Graph& g, NodeId u, NodeId v, const NodeSet& restrict);

/// Flow-equivalent tree (Gusfield construction, no contraction): for any
/// u, v in the restrict set, the minimum capacity edge on the tree path
/// equals their edge connectivity in G(restrict).
struct GomoryHuTree {
    NodeId root = kInvalidNode;
    std::vector<NodeId> parent;           // per compact node; kInvalidNode outside restrict / root
    std::vector<std::uint32_t> capacity;  // min cut to parent
    std::vector<NodeId> members;          // restrict, ascending

    std::uint32_t min_cut(NodeId u, NodeId v) const;  // min edge on tree path
};

/// Requires G(restrict) connected and |restrict| >= 2; n-1 max-flow runs.
GomoryHuTree gomory_hu_tree(const Graph& g, const NodeSet& restrict);

/// Edge connectivity of u, v restricted to C_k, k = min(sh(u), sh(v)).
/// Requires u != v and k >= 1.
std::uint32_t connectivity_through_core(const Graph& g, const CoreDecomposition& d, NodeId u, NodeId v);

/// Partition of V by the (transitive) relation k'(u,v) >= k, obtained by
/// dropping Gomory-Hu tree edges of capacity < k. Singletons allowed.
std::vector<NodeSet> wide_k_components(const Graph& g, std::uint32_t k);

/// Maximal vertex sets A with G(A) k-edge-connected, by recursively splitting
/// along any minimum cut of value < k. Singletons reported as parts.
std::vector<NodeSet> strict_k_components(const Graph& g, std::uint32_t k);

/// Global edge connectivity of G(restrict); 0 when disconnected or |restrict| < 2.
std::uint32_t global_edge_connectivity(const Graph& g, const NodeSet& restrict);

struct EdgeCut {
    NodeSet s_bar;  // complement side, never intersecting the pinned base
    std::vector<std::pair<NodeId, NodeId>> edges;
};

/// Enumerate every bipartition [S, S_bar] of V(G) with base subset of S and
/// S_bar non-empty. Guarded to n(G) <= 24.
void enumerate_cuts(const Graph& g, const NodeSet& base, const std::function<void(const EdgeCut&)>& fn);

/// Materializing convenience for tests.
std::vector<EdgeCut> collect_cuts(const Graph& g, const NodeSet& base);

}  // namespace coreconn
