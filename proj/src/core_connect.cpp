#include "coreconn/core_connect.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "coreconn/expansion.hpp"

namespace coreconn {

const char* to_string(NodeClass c) {
    switch (c) {
        case NodeClass::kCore: return "C";
        case NodeClass::kAdjoined: return "D";
        case NodeClass::kWhite: return "white";
    }
    return "?";
}

const char* to_string(TraceAction a) {
    switch (a) {
        case TraceAction::kSeed: return "seed";
        case TraceAction::kJoinCore: return "join-C";
        case TraceAction::kJoinAdjoined: return "join-D";
        case TraceAction::kReject: return "reject";
        case TraceAction::kShellOneExtend: return "shell1-extend";
    }
    return "?";
}

NodeSet Membership::core_set() const {
    NodeSet s(static_cast<NodeId>(node_class.size()));
    for (NodeId v = 0; v < node_class.size(); ++v)
        if (node_class[v] == NodeClass::kCore) s.insert(v);
    s.normalize();
    return s;
}

NodeSet Membership::adjoined_set() const {
    NodeSet s(static_cast<NodeId>(node_class.size()));
    for (NodeId v = 0; v < node_class.size(); ++v)
        if (node_class[v] == NodeClass::kAdjoined) s.insert(v);
    s.normalize();
    return s;
}

NodeSet Membership::base_set() const {
    NodeSet s(static_cast<NodeId>(node_class.size()));
    for (NodeId v = 0; v < node_class.size(); ++v)
        if (node_class[v] != NodeClass::kWhite) s.insert(v);
    s.normalize();
    return s;
}

namespace {

struct PoolEntry {
    const Cluster* cluster = nullptr;
    bool alive = true;       // neither joined nor discarded
    bool in_skipped = false;  // moved from the shell pool to the skipped pool (wide)
    bool evaluated = false;
    std::uint32_t levels_tried = 0;     // distinct k values this cluster was tested at
    std::uint32_t last_level = kInfDistance;
    std::uint32_t last_k = 0;
    std::string last_reason;
};

struct Runner {
    const Graph& g;
    const CoreDecomposition& d;
    Membership m;
    std::vector<std::vector<PoolEntry>> pool;  // per shell, ordinal order (== min-label order)
    NodeSet base;                              // C (strict) or C u D (wide)

    explicit Runner(const Graph& graph, const CoreDecomposition& decomp, MembershipMode mode)
        : g(graph), d(decomp), base(graph.node_count()) {
        m.mode = mode;
        m.node_class.assign(g.node_count(), NodeClass::kWhite);
        m.guarantee.assign(g.node_count(), 0);
        pool.assign(d.k_max() + 1, {});
        for (std::uint32_t k = 2; k <= d.k_max(); ++k)
            for (const Cluster& q : d.clusters_of_shell(k)) pool[k].push_back(PoolEntry{&q});
    }

    // Highest shell still represented in the shell pool (the family Q̲ the
    // outer loops are driven by; skipped clusters do not count).
    std::uint32_t top_shell() const {
        for (std::uint32_t k = d.k_max() + 1; k-- > 2;) {
            for (const PoolEntry& e : pool[k])
                if (e.alive && !e.in_skipped) return k;
            if (k == 2) break;
        }
        return 0;
    }

    void note_check(PoolEntry& e, std::uint32_t k, const std::string& reason) {
        ++m.stats.admissibility_checks;
        if (e.last_level != k) {
            ++e.levels_tried;
            e.last_level = k;
            m.stats.max_shell_levels_per_cluster = std::max(m.stats.max_shell_levels_per_cluster, e.levels_tried);
        }
        e.evaluated = true;
        e.last_k = k;
        e.last_reason = reason;
    }

    void adopt(const Cluster& q, NodeClass cls, std::uint32_t guarantee_k) {
        for (NodeId v : q.nodes) {
            m.node_class[v] = cls;
            m.guarantee[v] = guarantee_k;
        }
        base.union_with(q.nodes);
    }

    void log(const Cluster& q, TraceAction action, std::uint32_t k, std::string reason = {}) {
        m.trace.push_back(TraceEntry{q.shell, q.ordinal, action, k, std::move(reason)});
    }

    // Seed phase shared by both algorithms: descend shells from k_max looking
    // for a cluster whose own induced diameter is <= 2. Returns the seed
    // shell (0 when nothing seeded). In wide mode the shell's leftovers move
    // to the skipped pool instead of being dropped.
    std::uint32_t seed(std::vector<PoolEntry*>* skipped) {
        while (base.empty()) {
            const std::uint32_t k = top_shell();
            if (k < 2) return 0;
            PoolEntry* seeded = nullptr;
            for (PoolEntry& e : pool[k]) {
                note_check(e, k, "seed-diameter");
                if (induced_diameter_at_most_two(g, e.cluster->nodes, &m.stats.cluster_edge_touches)) {
                    seeded = &e;
                    break;
                }
            }
            if (seeded) {
                seeded->alive = false;
                adopt(*seeded->cluster, NodeClass::kCore, k);
                log(*seeded->cluster, TraceAction::kSeed, k);
            }
            for (PoolEntry& e : pool[k]) {
                if (!e.alive || e.in_skipped) continue;
                if (skipped) {
                    e.in_skipped = true;
                    skipped->push_back(&e);
                } else {
                    e.alive = false;
                    if (seeded) {
                        // diagnose the discard against the fresh C
                        ExpansionContext ctx(g, base, e.cluster->nodes, &m.stats.cluster_edge_touches);
                        const auto res = check_admissible(ctx, k, &m.stats.cluster_edge_touches);
                        log(*e.cluster, TraceAction::kReject, k, to_string(res.reason));
                    } else {
                        log(*e.cluster, TraceAction::kReject, k, "diameter");
                    }
                }
            }
            if (seeded) return k;
        }
        return 0;
    }

    // One fixpoint sweep over `entries` at level k: join every admissible
    // cluster, rescanning until a full pass joins nothing.
    void join_fixpoint(std::vector<PoolEntry*>& entries, std::uint32_t k, NodeClass cls) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (PoolEntry* e : entries) {
                if (!e->alive) continue;
                ExpansionContext ctx(g, base, e->cluster->nodes, &m.stats.cluster_edge_touches);
                const auto res = check_admissible(ctx, k, &m.stats.cluster_edge_touches);
                note_check(*e, k, to_string(res.reason));
                if (!res.admissible) continue;
                e->alive = false;
                adopt(*e->cluster, cls, k);
                log(*e->cluster, cls == NodeClass::kCore ? TraceAction::kJoinCore : TraceAction::kJoinAdjoined, k);
                changed = true;
            }
        }
    }

    Membership run_strict() {
        seed(nullptr);
        while (true) {
            const std::uint32_t k = top_shell();
            if (k < 2) break;
            std::vector<PoolEntry*> entries;
            for (PoolEntry& e : pool[k])
                if (e.alive) entries.push_back(&e);
            join_fixpoint(entries, k, NodeClass::kCore);
            for (PoolEntry* e : entries) {
                if (!e->alive) continue;
                e->alive = false;
                log(*e->cluster, TraceAction::kReject, k, e->last_reason);
            }
        }
        return std::move(m);
    }

    Membership run_wide() {
        std::vector<PoolEntry*> skipped;
        seed(&skipped);
        while (true) {
            const std::uint32_t k = top_shell();
            if (k < 2) break;
            // adjoin previously skipped clusters (all from higher shells) to D
            std::stable_sort(skipped.begin(), skipped.end(), [](const PoolEntry* a, const PoolEntry* b) {
                if (a->cluster->shell != b->cluster->shell) return a->cluster->shell < b->cluster->shell;
                return a->cluster->ordinal < b->cluster->ordinal;
            });
            std::vector<PoolEntry*> eligible;
            for (PoolEntry* e : skipped)
                if (e->alive && e->cluster->shell >= k) eligible.push_back(e);
            join_fixpoint(eligible, k, NodeClass::kAdjoined);
            std::erase_if(skipped, [](const PoolEntry* e) { return !e->alive; });

            // then the current shell joins C, tested against C u D
            std::vector<PoolEntry*> entries;
            for (PoolEntry& e : pool[k])
                if (e.alive) entries.push_back(&e);
            join_fixpoint(entries, k, NodeClass::kCore);
            for (PoolEntry* e : entries)
                if (e->alive) {
                    e->alive = false;
                    skipped.push_back(e);
                }
        }
        for (PoolEntry* e : skipped) {
            if (e->evaluated)
                log(*e->cluster, TraceAction::kReject, e->last_k, e->last_reason);
            else
                log(*e->cluster, TraceAction::kReject, e->cluster->shell, "unvisited");
        }
        return std::move(m);
    }
};

}  // namespace

Membership strict_core_connected(const Graph& g, const CoreDecomposition& d) {
    return Runner(g, d, MembershipMode::kStrict).run_strict();
}

Membership wide_core_connected(const Graph& g, const CoreDecomposition& d) {
    return Runner(g, d, MembershipMode::kWide).run_wide();
}

Membership extend_shell_one(const Graph& g, const CoreDecomposition& d, const Membership& m) {
    Membership out = m;
    NodeSet core = m.core_set();
    if (core.empty() || d.k_max() < 1) return out;
    const NodeSet anchor = m.mode == MembershipMode::kWide ? m.base_set() : std::move(core);
    for (const Cluster& q : d.clusters_of_shell(1)) {
        bool attached = false;
        for (NodeId v : q.nodes) {
            for (NodeId w : g.neighbors(v))
                if (anchor.contains(w)) {
                    attached = true;
                    break;
                }
            if (attached) break;
        }
        if (!attached) continue;
        for (NodeId v : q.nodes) {
            out.node_class[v] = NodeClass::kCore;
            out.guarantee[v] = 1;
        }
        out.trace.push_back(TraceEntry{q.shell, q.ordinal, TraceAction::kShellOneExtend, 1, {}});
    }
    return out;
}

std::uint32_t pair_lower_bound(const Membership& m, NodeId u, NodeId v) {
    if (u == v) throw std::invalid_argument("pair_lower_bound: endpoints must differ");
    if (m.node_class.at(u) == NodeClass::kWhite || m.node_class.at(v) == NodeClass::kWhite) return 0;
    return std::min(m.guarantee[u], m.guarantee[v]);
}

std::vector<MembershipRecord> membership_report(const Graph& g, const CoreDecomposition& d, const Membership& m) {
    std::vector<MembershipRecord> records;
    records.reserve(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v)  // compact order == label order
        records.push_back(MembershipRecord{g.label(v), d.shell_index(v), m.node_class[v], m.guarantee[v]});
    return records;
}

}  // namespace coreconn
