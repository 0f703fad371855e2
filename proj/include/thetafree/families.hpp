#pragma once

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "thetafree/graph.hpp"

namespace thetafree {

/// Book graph K2 v kK1: hubs 0 and 1 are adjacent and both joined to pages 2..k+1.
Graph book(int k);

/// Edge list of book(k) with the same labelling, for any k >= 1 (no vertex budget).
std::vector<std::pair<int, int>> book_edges(int k);

enum class Family {
    star,                 // K_{1,n-1}, centre 0
    star_plus_edge,       // K_{1,n-1} plus the leaf edge 1-2
    complete,             // K_n
    complete_minus_edge,  // K_n without the edge 0-1
    complete_bipartite,   // K_{s,t}, sides 0..s-1 and s..s+t-1
    path,                 // P_n, 0-1-...-(n-1)
    cycle,                // C_n
};

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

/// Builds a named family member. complete_bipartite takes (s, t); all others take (n).
Graph family(Family f, std::span<const int> params);

Graph star(int n);
Graph star_plus_edge(int n);
Graph complete(int n);
Graph complete_minus_edge(int n);
Graph complete_bipartite(int s, int t);
Graph path(int n);
Graph cycle(int n);

/// Disjoint union; the vertices of b follow those of a.
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace thetafree
