#pragma once

#include <cstdint>
#include <string>

#include "coreconn/core_connect.hpp"
#include "coreconn/core_decomposition.hpp"
#include "coreconn/graph.hpp"

namespace coreconn {

struct RenderOptions {
    double canvas_size = 1000.0;
    double node_radius = 4.0;
    std::uint64_t edge_cap = 5000;  // draw at most this many edges, in index order
    bool draw_edges = true;
};

/// Deterministic radial rendering: one ring per shell (highest shell
/// innermost), clusters laid out contiguously along each ring, fill color
/// from the shell index. Class C nodes have no border, class D nodes a border
/// colored by their guarantee, white nodes a white fill with a shell-colored
/// border. Throws when k_max = 0.
std::string render_svg(const Graph& g, const CoreDecomposition& d, const Membership& m,
                       const RenderOptions& opts = {});

}  // namespace coreconn
