#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

namespace coreconn {

using NodeId = std::uint32_t;
using Distance = std::uint32_t;

inline constexpr Distance kInfDistance = std::numeric_limits<Distance>::max();
inline constexpr NodeId kInvalidNode = std::numeric_limits<NodeId>::max();

/// Set of compact node indices with O(1) membership test and iteration in
/// ascending index order. Bound to a fixed universe size (the graph's node
/// count).
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(NodeId universe) : mask_(universe, 0) {}

    NodeSet(NodeId universe, std::initializer_list<NodeId> nodes) : NodeSet(universe) {
        for (NodeId v : nodes) insert(v);
        normalize();
    }

    static NodeSet from_nodes(NodeId universe, std::vector<NodeId> nodes);
    static NodeSet full(NodeId universe);

    NodeId universe() const { return static_cast<NodeId>(mask_.size()); }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

    bool contains(NodeId v) const { return v < mask_.size() && mask_[v] != 0; }

    /// Insert keeps the item list append-only; call normalize() once bulk
    /// insertion is done (iteration assumes ascending order).
    void insert(NodeId v);
    void normalize();

    void union_with(const NodeSet& other);

    std::span<const NodeId> items() const { return items_; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    NodeId min_node() const { return items_.empty() ? kInvalidNode : items_.front(); }

    bool operator==(const NodeSet& other) const { return items_ == other.items_; }

private:
    std::vector<char> mask_;
    std::vector<NodeId> items_;
    bool sorted_ = true;
};

}  // namespace coreconn
