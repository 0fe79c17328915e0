#pragma once

#include <cstdint>
#include <vector>

#include "coreconn/graph.hpp"

namespace coreconn {

/// A base set C and a disjoint candidate Q, with everything the expansion
/// test needs about G' = G(C u Q): distances to C, per-node edge counts into
/// C, and the minimum degree of G'. Built once per candidate.
class ExpansionContext {
public:
    /// Throws std::invalid_argument if C or Q is empty or they intersect.
    /// `touches` (optional) accumulates inspected adjacency entries.
    ExpansionContext(const Graph& g, NodeSet base, NodeSet candidate, std::uint64_t* touches = nullptr);

    const Graph& graph() const { return *g_; }
    const NodeSet& base() const { return base_; }            // C
    const NodeSet& candidate() const { return candidate_; }  // Q
    const NodeSet& combined() const { return combined_; }    // C' = C u Q

    bool in_combined(NodeId v) const { return combined_.contains(v); }
    bool in_base(NodeId v) const { return base_.contains(v); }

    /// rho_{G'}(x, C); 0 on C, kInfDistance when unreachable.
    Distance distance_to_base(NodeId x) const { return dist_to_base_.at(x); }

    /// |[x, C]| for x in Q (0 elsewhere).
    std::uint32_t edges_to_base(NodeId x) const { return edges_to_base_.at(x); }

    /// delta(G').
    std::uint32_t min_degree_combined() const { return min_degree_combined_; }

private:
    const Graph* g_;
    NodeSet base_;
    NodeSet candidate_;
    NodeSet combined_;
    std::vector<Distance> dist_to_base_;
    std::vector<std::uint32_t> edges_to_base_;
    std::uint32_t min_degree_combined_ = 0;
};

/// Contracted distance rho_{C'/C}(x, y). Both nodes must lie in C'.
/// For x, y in Q it is min(rho_{G(Q)}(x,y), rho_{G'}(x,C) + rho_{G'}(y,C));
/// if either endpoint is in C it is the other endpoint's distance to C.
Distance contracted_distance(const ExpansionContext& ctx, NodeId x, NodeId y);

/// Max contracted distance over all pairs of C'; kInfDistance if some node of
/// Q is out of reach.
Distance contracted_diameter(const ExpansionContext& ctx);

/// Equivalent to contracted_diameter(ctx) <= 2 without materializing all
/// pairs: every x in Q needs distance <= 2 to C, and a depth-2 BFS in G(Q)
/// from every node of Q outside the 1-boundary must cover Q.
bool contracted_diameter_at_most_two(const ExpansionContext& ctx, std::uint64_t* touches = nullptr);

struct BoundarySets {
    NodeSet at_least;  // nodes of Q with >= j edges into C
    NodeSet fewer;     // the rest of Q
};

/// Partition of Q by |[x, C]| >= j. Requires j >= 1.
BoundarySets boundary_sets(const ExpansionContext& ctx, std::uint32_t j);

/// Phi_{C'/C} = sum over x in Q of min(max(1, |[x, d2bar]|), |[x, C]|),
/// where d2bar is the set of Q-nodes with fewer than two edges into C.
std::uint64_t phi(const ExpansionContext& ctx);

/// Psi_{C'/C}(k) = max(Phi - k, |d1| - k, |d1| - |Q|) where d1 is the
/// 1-boundary of Q. Defined only for k <= delta(G'); throws otherwise.
std::int64_t psi(const ExpansionContext& ctx, std::uint32_t k);

enum class AdmissibleReason { kOk, kMinDegree, kDiameter, kPsi };
const char* to_string(AdmissibleReason reason);

struct Admissibility {
    bool admissible = false;
    AdmissibleReason reason = AdmissibleReason::kOk;
    std::int64_t psi_value = 0;  // meaningful only when the psi check ran
};

/// k <= delta(G'), contracted diameter <= 2, Psi(k) >= 0, in that order;
/// the reason names the first failing condition.
Admissibility check_admissible(const ExpansionContext& ctx, std::uint32_t k, std::uint64_t* touches = nullptr);

}  // namespace coreconn
