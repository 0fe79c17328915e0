#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "coreconn/core_connect.hpp"
#include "coreconn/core_decomposition.hpp"
#include "coreconn/graph.hpp"

namespace coreconn {

/// Per-shell coverage of the core-connected set C and its aggregates.
/// rho[i] is the covered fraction of shell k = i + 1 (0 for empty shells);
/// alpha is the plain average of rho, beta the shell-index weighted average,
/// gamma the shell-size weighted average (denominator: all nodes of shell
/// index >= 1). D nodes count as outside C.
struct CoverageMetrics {
    std::vector<double> rho;                // index i -> shell k = i + 1
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    std::vector<std::uint64_t> shell_sizes;  // index k = 0..k_max
    std::uint64_t c_size = 0;
};

/// Throws when k_max = 0 (no shells to cover).
CoverageMetrics coverage(const CoreDecomposition& d, const Membership& m);

struct PairHistogramBin {
    std::uint64_t both_in_core = 0;  // both endpoints in C
    std::uint64_t other = 0;
};

/// All unordered node pairs binned by min(sh(u), sh(v)); index = k = 0..k_max.
/// Computed combinatorially from per-shell counts.
std::vector<PairHistogramBin> pair_histogram(const CoreDecomposition& d, const Membership& m);

struct PairBoundRecord {
    NodeId u = kInvalidNode;
    NodeId v = kInvalidNode;
    std::uint32_t min_shell = 0;
    std::uint32_t bound = 0;
    std::uint32_t exact = 0;
    std::uint32_t through_core = 0;
};

struct ShellAggregate {
    std::uint32_t k = 0;
    std::uint64_t pair_count = 0;
    double exact_mean = 0.0;
    double exact_stddev = 0.0;  // population stddev
    double through_mean = 0.0;
    double through_stddev = 0.0;
};

struct BoundComparison {
    std::vector<PairBoundRecord> records;
    std::vector<ShellAggregate> aggregates;  // ascending k, only populated shells
};

/// Certified bound vs. exact max-flow connectivity (whole graph and through
/// the min-shell core) for the given pairs. Pairs must have distinct,
/// non-isolated endpoints. Throws when node_count exceeds node_limit (the
/// max-flow RAM guard).
BoundComparison bound_vs_exact(const Graph& g, const CoreDecomposition& d, const Membership& m,
                               std::span<const std::pair<NodeId, NodeId>> pairs, NodeId node_limit = 5000);

}  // namespace coreconn
