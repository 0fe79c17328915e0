#include "coreconn/expansion.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace coreconn {

ExpansionContext::ExpansionContext(const Graph& g, NodeSet base, NodeSet candidate, std::uint64_t* touches)
    : g_(&g), base_(std::move(base)), candidate_(std::move(candidate)) {
    if (base_.empty() || candidate_.empty())
        throw std::invalid_argument("ExpansionContext: base and candidate must be non-empty");
    for (NodeId v : candidate_)
        if (base_.contains(v)) throw std::invalid_argument("ExpansionContext: base and candidate must be disjoint");

    combined_ = base_;
    combined_.union_with(candidate_);

    std::uint64_t local = 0;
    const NodeId n = g.node_count();
    edges_to_base_.assign(n, 0);
    std::uint32_t min_deg = kInfDistance;
    for (NodeId x : candidate_) {
        std::uint32_t deg_combined = 0;
        for (NodeId w : g.neighbors(x)) {
            ++local;
            if (base_.contains(w)) {
                ++edges_to_base_[x];
                ++deg_combined;
            } else if (candidate_.contains(w)) {
                ++deg_combined;
            }
        }
        min_deg = std::min(min_deg, deg_combined);
    }
    for (NodeId c : base_) {
        std::uint32_t deg_combined = 0;
        for (NodeId w : g.neighbors(c)) {
            ++local;
            if (combined_.contains(w)) ++deg_combined;
        }
        min_deg = std::min(min_deg, deg_combined);
    }
    min_degree_combined_ = min_deg;

    // multi-source BFS from C within G'
    dist_to_base_.assign(n, kInfDistance);
    std::deque<NodeId> queue;
    for (NodeId c : base_) {
        dist_to_base_[c] = 0;
        queue.push_back(c);
    }
    while (!queue.empty()) {
        const NodeId v = queue.front();
        queue.pop_front();
        for (NodeId w : g.neighbors(v)) {
            ++local;
            if (!combined_.contains(w) || dist_to_base_[w] != kInfDistance) continue;
            dist_to_base_[w] = dist_to_base_[v] + 1;
            queue.push_back(w);
        }
    }
    if (touches) *touches += local;
}

namespace {

// BFS within G(Q) only; paths may not leave the candidate set.
std::vector<Distance> candidate_bfs(const ExpansionContext& ctx, NodeId from) {
    const Graph& g = ctx.graph();
    std::vector<Distance> dist(g.node_count(), kInfDistance);
    dist[from] = 0;
    std::deque<NodeId> queue{from};
    while (!queue.empty()) {
        const NodeId v = queue.front();
        queue.pop_front();
        for (NodeId w : g.neighbors(v)) {
            if (!ctx.candidate().contains(w) || dist[w] != kInfDistance) continue;
            dist[w] = dist[v] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

Distance add_distances(Distance a, Distance b) {
    if (a == kInfDistance || b == kInfDistance) return kInfDistance;
    return a + b;
}

}  // namespace

Distance contracted_distance(const ExpansionContext& ctx, NodeId x, NodeId y) {
    if (!ctx.in_combined(x) || !ctx.in_combined(y))
        throw std::invalid_argument("contracted_distance: node outside C'");
    const bool xc = ctx.in_base(x);
    const bool yc = ctx.in_base(y);
    if (xc && yc) return 0;
    if (xc) return ctx.distance_to_base(y);
    if (yc) return ctx.distance_to_base(x);
    const auto within = candidate_bfs(ctx, x)[y];
    return std::min(within, add_distances(ctx.distance_to_base(x), ctx.distance_to_base(y)));
}

Distance contracted_diameter(const ExpansionContext& ctx) {
    Distance diameter = 0;
    for (NodeId x : ctx.candidate()) {
        const Distance to_base = ctx.distance_to_base(x);
        if (to_base == kInfDistance) return kInfDistance;
        diameter = std::max(diameter, to_base);
        const auto within = candidate_bfs(ctx, x);
        for (NodeId y : ctx.candidate()) {
            if (y <= x) continue;
            const Distance d = std::min(within[y], add_distances(to_base, ctx.distance_to_base(y)));
            if (d == kInfDistance) return kInfDistance;
            diameter = std::max(diameter, d);
        }
    }
    return diameter;
}

bool contracted_diameter_at_most_two(const ExpansionContext& ctx, std::uint64_t* touches) {
    const Graph& g = ctx.graph();
    const NodeSet& q = ctx.candidate();
    std::uint64_t local = 0;

    // Pairs (x, c in C) need rho_{G'}(x, C) <= 2, i.e. x touches C or has a
    // G(Q)-neighbor that does. Pairs inside Q pass when both touch C
    // (1 + 1 = 2) or lie within distance 2 in G(Q); so each node outside the
    // 1-boundary must cover Q with a depth-2 BFS.
    std::vector<NodeId> interior;  // Q minus the 1-boundary
    for (NodeId x : q)
        if (ctx.edges_to_base(x) == 0) interior.push_back(x);

    bool ok = true;
    std::vector<std::uint32_t> mark(g.node_count(), 0);
    std::uint32_t stamp = 0;
    for (NodeId x : interior) {
        bool boundary_neighbor = false;
        for (NodeId y : g.neighbors(x)) {
            ++local;
            if (q.contains(y) && ctx.edges_to_base(y) > 0) {
                boundary_neighbor = true;
                break;
            }
        }
        if (!boundary_neighbor) {
            ok = false;
            break;
        }
        ++stamp;
        std::size_t reached = 1;
        mark[x] = stamp;
        for (NodeId y : g.neighbors(x)) {
            ++local;
            if (!q.contains(y) || mark[y] == stamp) continue;
            mark[y] = stamp;
            ++reached;
        }
        for (NodeId y : g.neighbors(x)) {
            if (!q.contains(y)) continue;
            for (NodeId z : g.neighbors(y)) {
                ++local;
                if (!q.contains(z) || mark[z] == stamp) continue;
                mark[z] = stamp;
                ++reached;
            }
        }
        if (reached != q.size()) {
            ok = false;
            break;
        }
    }
    if (touches) *touches += local;
    return ok;
}

BoundarySets boundary_sets(const ExpansionContext& ctx, std::uint32_t j) {
    if (j < 1) throw std::invalid_argument("boundary_sets: j must be >= 1");
    BoundarySets sets{NodeSet(ctx.graph().node_count()), NodeSet(ctx.graph().node_count())};
    for (NodeId x : ctx.candidate()) {
        if (ctx.edges_to_base(x) >= j)
            sets.at_least.insert(x);
        else
            sets.fewer.insert(x);
    }
    sets.at_least.normalize();
    sets.fewer.normalize();
    return sets;
}

std::uint64_t phi(const ExpansionContext& ctx) {
    const Graph& g = ctx.graph();
    std::uint64_t sum = 0;
    for (NodeId x : ctx.candidate()) {
        std::uint64_t into_d2bar = 0;
        for (NodeId w : g.neighbors(x))
            if (ctx.candidate().contains(w) && ctx.edges_to_base(w) < 2) ++into_d2bar;
        sum += std::min<std::uint64_t>(std::max<std::uint64_t>(1, into_d2bar), ctx.edges_to_base(x));
    }
    return sum;
}

std::int64_t psi(const ExpansionContext& ctx, std::uint32_t k) {
    if (k > ctx.min_degree_combined())
        throw std::invalid_argument("psi: k exceeds the minimum degree of G'");
    std::uint64_t boundary1 = 0;
    for (NodeId x : ctx.candidate())
        if (ctx.edges_to_base(x) >= 1) ++boundary1;
    const std::int64_t p = static_cast<std::int64_t>(phi(ctx));
    const std::int64_t b1 = static_cast<std::int64_t>(boundary1);
    const std::int64_t q = static_cast<std::int64_t>(ctx.candidate().size());
    const std::int64_t kk = static_cast<std::int64_t>(k);
    return std::max({p - kk, b1 - kk, b1 - q});
}

const char* to_string(AdmissibleReason reason) {
    switch (reason) {
        case AdmissibleReason::kOk: return "ok";
        case AdmissibleReason::kMinDegree: return "delta";
        case AdmissibleReason::kDiameter: return "diameter";
        case AdmissibleReason::kPsi: return "psi";
    }
    return "?";
}

Admissibility check_admissible(const ExpansionContext& ctx, std::uint32_t k, std::uint64_t* touches) {
    if (k > ctx.min_degree_combined()) return {false, AdmissibleReason::kMinDegree, 0};
    if (!contracted_diameter_at_most_two(ctx, touches)) return {false, AdmissibleReason::kDiameter, 0};
    const std::int64_t value = psi(ctx, k);
    if (value < 0) return {false, AdmissibleReason::kPsi, value};
    return {true, AdmissibleReason::kOk, value};
}

}  // namespace coreconn
