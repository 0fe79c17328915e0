#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "coreconn/graph.hpp"

namespace coreconn {

/// A connected component of one shell's induced subgraph.
struct Cluster {
    std::uint32_t shell = 0;
    std::uint32_t ordinal = 0;  // position within the shell, by minimum compact index
    NodeSet nodes;
};

/// k-core decomposition: per-node shell index, shells S_k, and the clusters
/// (connected components) of every shell k >= 1. Immutable once built.
class CoreDecomposition {
public:
    std::uint32_t shell_index(NodeId v) const { return shell_.at(v); }
    std::uint32_t k_max() const { return k_max_; }

    /// S_k; empty set for k > k_max.
    const NodeSet& shell(std::uint32_t k) const;

    /// C_k = union of all shells with index >= k. Empty for k > k_max; V for k = 0.
    NodeSet core(std::uint32_t k) const;

    /// Clusters of shell k, ordered by minimum compact index. Requires 1 <= k <= k_max.
    std::span<const Cluster> clusters_of_shell(std::uint32_t k) const;

    std::span<const std::uint32_t> shell_indices() const { return shell_; }

private:
    friend CoreDecomposition core_decompose(const Graph& g);
    std::vector<std::uint32_t> shell_;
    std::uint32_t k_max_ = 0;
    std::vector<NodeSet> shells_;                 // index k = 0..k_max
    std::vector<std::vector<Cluster>> clusters_;  // index k; [0] stays empty
    NodeSet empty_set_;
};

/// Bucket-queue peeling, O(n + e). Deterministic: ties break by compact index.
CoreDecomposition core_decompose(const Graph& g);

/// psi(A): minimum degree of the subgraph induced by A. A must be non-empty.
std::uint32_t min_induced_degree(const Graph& g, const NodeSet& a);

}  // namespace coreconn
