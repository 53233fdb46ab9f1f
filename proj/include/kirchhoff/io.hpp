#pragma once

#include <string>
#include <string_view>

#include "kirchhoff/graph.hpp"

namespace kirchhoff {

/// Edge-list text: a header line "order size" followed by `size` lines of
/// 1-based vertex pairs. Blank lines and lines starting with '#' are ignored.
/// Errors: parse-error (with line number), duplicate-edge, index-out-of-range.
Graph parseEdgeList(std::string_view text);
std::string writeEdgeList(const Graph& g);

/// graph6 (no header). Errors: bad-length, bad-byte.
Graph parseGraph6(std::string_view bytes);
std::string writeGraph6(const Graph& g);

/// Reads a graph file; ".g6" / ".graph6" selects graph6, anything else is an
/// edge list.
Graph readGraphFile(const std::string& path);

}  // namespace kirchhoff
