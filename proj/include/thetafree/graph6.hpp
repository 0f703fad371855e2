#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "thetafree/graph.hpp"

namespace thetafree {

/// Thrown for text that is not a graph6 encoding of a graph within the vertex budget.
class Graph6Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Decodes one graph6 string. A leading ">>graph6<<" marker and trailing CR/LF are accepted.
Graph from_graph6(std::string_view text);

/// Encodes g as graph6 (no trailing newline).
std::string to_graph6(const Graph& g);

/// Reads one graph per non-empty line.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace thetafree
