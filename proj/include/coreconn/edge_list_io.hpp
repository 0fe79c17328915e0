#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "coreconn/graph.hpp"

namespace coreconn {

struct EdgeListParseError : std::runtime_error {
    explicit EdgeListParseError(const std::string& what, std::uint64_t line)
        : std::runtime_error(what), line_number(line) {}
    std::uint64_t line_number = 0;
};

struct EdgeListResult {
    Graph graph;
    std::uint64_t self_loops_dropped = 0;
    std::uint64_t duplicate_edges_dropped = 0;
    std::uint64_t lines_read = 0;
};

/// One edge per line: two whitespace-separated node ids (integers or tokens).
/// Lines starting with '#' and blank lines are skipped. A line with any other
/// token count raises EdgeListParseError with its line number. An empty file
/// yields an empty graph.
EdgeListResult parse_edge_list(const std::string& path);

/// Same format, from an in-memory string (tests).
EdgeListResult parse_edge_list_text(const std::string& text);

}  // namespace coreconn
