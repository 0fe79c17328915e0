#include "coreconn/node_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace coreconn {

NodeSet NodeSet::from_nodes(NodeId universe, std::vector<NodeId> nodes) {
    NodeSet s(universe);
    for (NodeId v : nodes) s.insert(v);
    s.normalize();
    return s;
}

NodeSet NodeSet::full(NodeId universe) {
    NodeSet s(universe);
    s.items_.reserve(universe);
    for (NodeId v = 0; v < universe; ++v) {
        s.mask_[v] = 1;
        s.items_.push_back(v);
    }
    return s;
}

void NodeSet::insert(NodeId v) {
    if (v >= mask_.size()) throw std::out_of_range("NodeSet::insert: node outside universe");
    if (mask_[v]) return;
    mask_[v] = 1;
    if (!items_.empty() && v < items_.back()) sorted_ = false;
    items_.push_back(v);
}

void NodeSet::normalize() {
    if (!sorted_) {
        std::sort(items_.begin(), items_.end());
        sorted_ = true;
    }
}

void NodeSet::union_with(const NodeSet& other) {
    for (NodeId v : other.items_) insert(v);
    normalize();
}

}  // namespace coreconn
