#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "csf/graph.hpp"

namespace csf {

/// "n <count>" on the first line, then one 0-based "u v" pair per line.
/// Blank lines and lines starting with '#' are skipped.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Standard graph6 encoding (n <= 62).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Graph6 if the text is a single token of graph6 characters, else an edge list.
Graph parse_graph(std::string_view text);

}  // namespace csf
