#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coreconn/core_decomposition.hpp"
#include "coreconn/graph.hpp"

namespace coreconn {

enum class MembershipMode { kStrict, kWide };

enum class NodeClass : std::uint8_t { kCore, kAdjoined, kWhite };  // C, D, white
const char* to_string(NodeClass c);

enum class TraceAction { kSeed, kJoinCore, kJoinAdjoined, kReject, kShellOneExtend };
const char* to_string(TraceAction a);

struct TraceEntry {
    std::uint32_t cluster_shell = 0;
    std::uint32_t cluster_ordinal = 0;
    TraceAction action = TraceAction::kReject;
    std::uint32_t k = 0;
    std::string reason;  // "delta", "diameter", "psi", "unvisited", or empty
};

struct AlgorithmStats {
    std::uint64_t cluster_edge_touches = 0;   // adjacency entries inspected by the algorithm
    std::uint64_t admissibility_checks = 0;   // candidate evaluations (seed checks included)
    std::uint32_t max_shell_levels_per_cluster = 0;  // distinct k values any one cluster was tried at
};

/// Result of the core-connected construction: per-node class (C / D / white)
/// and the certified connectivity guarantee. C nodes carry their shell index,
/// D nodes the k at adjunction time, white nodes 0; shell-1 extension nodes
/// carry 1. The trace logs every cluster decision in order.
struct Membership {
    MembershipMode mode = MembershipMode::kStrict;
    std::vector<NodeClass> node_class;
    std::vector<std::uint32_t> guarantee;
    std::vector<TraceEntry> trace;
    AlgorithmStats stats;

    bool in_core(NodeId v) const { return node_class[v] == NodeClass::kCore; }
    bool in_adjoined(NodeId v) const { return node_class[v] == NodeClass::kAdjoined; }

    NodeSet core_set() const;      // C
    NodeSet adjoined_set() const;  // D
    NodeSet base_set() const;      // C u D
};

/// Strict-sense construction: seed with the first cluster of diameter <= 2
/// searching shells downward from k_max, then per shell join admissible
/// clusters (rescanning to a fixpoint) and discard the rest.
Membership strict_core_connected(const Graph& g, const CoreDecomposition& d);

/// Wide-sense construction: like strict, but skipped clusters stay in a pool
/// and may later be adjoined to D at a lower k; candidate tests run against
/// the combined base C u D.
Membership wide_core_connected(const Graph& g, const CoreDecomposition& d);

/// Adjoin every shell-1 cluster with an edge into C (strict) or C u D (wide)
/// to C with guarantee 1. No-op when C is empty.
Membership extend_shell_one(const Graph& g, const CoreDecomposition& d, const Membership& m);

/// min(guarantee(u), guarantee(v)); 0 when either endpoint is white.
/// Throws when u == v.
std::uint32_t pair_lower_bound(const Membership& m, NodeId u, NodeId v);

struct MembershipRecord {
    std::string label;
    std::uint32_t shell = 0;
    NodeClass node_class = NodeClass::kWhite;
    std::uint32_t guarantee = 0;
};

/// One record per node, ordered by label.
std::vector<MembershipRecord> membership_report(const Graph& g, const CoreDecomposition& d, const Membership& m);

}  // namespace coreconn
