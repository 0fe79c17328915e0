#include "coreconn/core_decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace coreconn {

const NodeSet& CoreDecomposition::shell(std::uint32_t k) const {
    if (k >= shells_.size()) return empty_set_;
    return shells_[k];
}

NodeSet CoreDecomposition::core(std::uint32_t k) const {
    NodeSet result(static_cast<NodeId>(shell_.size()));
    for (NodeId v = 0; v < shell_.size(); ++v)
        if (shell_[v] >= k) result.insert(v);
    result.normalize();
    return result;
}

std::span<const Cluster> CoreDecomposition::clusters_of_shell(std::uint32_t k) const {
    if (k < 1 || k > k_max_) throw std::out_of_range("clusters_of_shell: k outside 1..k_max");
    return clusters_[k];
}

CoreDecomposition core_decompose(const Graph& g) {
    const NodeId n = g.node_count();
    CoreDecomposition d;
    d.shell_.assign(n, 0);
    d.empty_set_ = NodeSet(n);
    if (n == 0) {
        d.shells_.assign(1, NodeSet(n));
        d.clusters_.assign(1, {});
        return d;
    }

    // Bucket peeling: process vertices in ascending current degree; when v is
    // processed its current degree is its shell index, and every unprocessed
    // higher-degree neighbor moves one bucket down.
    std::vector<std::uint32_t> deg(n);
    std::uint32_t max_deg = 0;
    for (NodeId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }

    std::vector<std::uint32_t> bin(max_deg + 2, 0);
    for (NodeId v = 0; v < n; ++v) ++bin[deg[v]];
    std::uint32_t start = 0;
    for (std::uint32_t dd = 0; dd <= max_deg; ++dd) {
        const std::uint32_t count = bin[dd];
        bin[dd] = start;
        start += count;
    }
    std::vector<NodeId> vert(n);
    std::vector<std::uint32_t> pos(n);
    for (NodeId v = 0; v < n; ++v) {  // ascending index within each bucket
        pos[v] = bin[deg[v]];
        vert[pos[v]] = v;
        ++bin[deg[v]];
    }
    for (std::uint32_t dd = max_deg + 1; dd >= 1; --dd) bin[dd] = bin[dd - 1];
    bin[0] = 0;

    for (std::uint32_t i = 0; i < n; ++i) {
        const NodeId v = vert[i];
        d.shell_[v] = deg[v];
        for (NodeId u : g.neighbors(v)) {
            if (deg[u] <= deg[v]) continue;
            // swap u with the first vertex of its bucket, then shrink the bucket
            const std::uint32_t du = deg[u];
            const std::uint32_t pu = pos[u];
            const std::uint32_t pw = bin[du];
            const NodeId w = vert[pw];
            if (u != w) {
                pos[u] = pw;
                pos[w] = pu;
                vert[pu] = w;
                vert[pw] = u;
            }
            ++bin[du];
            --deg[u];
        }
    }

    d.k_max_ = *std::max_element(d.shell_.begin(), d.shell_.end());
    d.shells_.assign(d.k_max_ + 1, NodeSet(n));
    for (NodeId v = 0; v < n; ++v) d.shells_[d.shell_[v]].insert(v);
    for (auto& s : d.shells_) s.normalize();

    d.clusters_.assign(d.k_max_ + 1, {});
    for (std::uint32_t k = 1; k <= d.k_max_; ++k) {
        auto components = connected_components(g, d.shells_[k]);
        d.clusters_[k].reserve(components.size());
        for (std::uint32_t ord = 0; ord < components.size(); ++ord)
            d.clusters_[k].push_back(Cluster{k, ord, std::move(components[ord])});
    }
    return d;
}

std::uint32_t min_induced_degree(const Graph& g, const NodeSet& a) {
    if (a.empty()) throw std::invalid_argument("min_induced_degree: empty node set");
    std::uint32_t best = kInfDistance;
    for (NodeId v : a) {
        std::uint32_t d = 0;
        for (NodeId w : g.neighbors(v))
            if (a.contains(w)) ++d;
        best = std::min(best, d);
    }
    return best;
}

}  // namespace coreconn
