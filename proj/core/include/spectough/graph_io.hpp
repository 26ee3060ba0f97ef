#pragma once

#include <string>

#include "spectough/graph.hpp"

namespace spectough {

enum class GraphFormat { Graph6, EdgeList };

/// Decodes `text` in the named format. Edge list: header line "n m", then m
/// lines "u v" with 0-based labels. Graph6: standard encoding including the
/// extended length prefix for n >= 63. Throws ParseError with a 1-based line
/// number on malformed input (graph6 errors report line 1).
Graph parse_graph(const std::string& text, GraphFormat format);

/// Canonical encoding; parse_graph(write_graph(g, f), f) reproduces the
/// adjacency relation exactly. Graph6 output has no trailing newline; the
/// edge list ends with one.
std::string write_graph(const Graph& g, GraphFormat format);

}  // namespace spectough
