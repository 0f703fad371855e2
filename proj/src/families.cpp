#include "thetafree/families.hpp"

#include <string>

namespace thetafree {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

std::vector<std::pair<int, int>> book_edges(int k) {
    require(k >= 1, "book: k must be at least 1");
    std::vector<std::pair<int, int>> edges{{0, 1}};
    for (int p = 2; p < k + 2; ++p) {
        edges.emplace_back(0, p);
        edges.emplace_back(1, p);
    }
    return edges;
}

Graph book(int k) {
    require(k >= 1, "book: k must be at least 1");
    require(k + 2 <= kMaxVertices, "book: k + 2 exceeds the vertex budget");
    return Graph::from_edges(k + 2, book_edges(k));
}

Graph star(int n) {
    require(n >= 2, "star: need at least 2 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(n, edges);
}

Graph star_plus_edge(int n) {
    require(n >= 3, "star_plus_edge: need at least 3 vertices");
    return star(n).with_edge(1, 2);
}

Graph complete(int n) {
    require(n >= 1, "complete: need at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph complete_minus_edge(int n) {
    require(n >= 2, "complete_minus_edge: need at least 2 vertices");
    return complete(n).without_edge(0, 1);
}

Graph complete_bipartite(int s, int t) {
    require(s >= 1 && t >= 1, "complete_bipartite: both sides must be non-empty");
    require(s + t <= kMaxVertices, "complete_bipartite: s + t exceeds the vertex budget");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < s; ++u)
        for (int v = s; v < s + t; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(s + t, edges);
}

Graph path(int n) {
    require(n >= 1, "path: need at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
    require(n >= 3, "cycle: length must be at least 3");
    return path(n).with_edge(n - 1, 0);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int shift = a.order();
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph::from_edges(a.order() + b.order(), edges);
}

Family parse_family(std::string_view name) {
    if (name == "star") return Family::star;
    if (name == "star_plus_edge") return Family::star_plus_edge;
    if (name == "complete") return Family::complete;
    if (name == "complete_minus_edge") return Family::complete_minus_edge;
    if (name == "complete_bipartite") return Family::complete_bipartite;
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::star: return "star";
        case Family::star_plus_edge: return "star_plus_edge";
        case Family::complete: return "complete";
        case Family::complete_minus_edge: return "complete_minus_edge";
        case Family::complete_bipartite: return "complete_bipartite";
        case Family::path: return "path";
        case Family::cycle: return "cycle";
    }
    return "?";
}

Graph family(Family f, std::span<const int> params) {
    const std::size_t want = f == Family::complete_bipartite ? 2 : 1;
    require(params.size() == want, std::string(family_name(f)) + ": expected " + std::to_string(want) +
                                       " parameter(s), got " + std::to_string(params.size()));
    const int n = params[0];
    require(n <= kMaxVertices, std::string(family_name(f)) + ": exceeds the vertex budget");
    switch (f) {
        case Family::star: return star(n);
        case Family::star_plus_edge: return star_plus_edge(n);
        case Family::complete: return complete(n);
        case Family::complete_minus_edge: return complete_minus_edge(n);
        case Family::complete_bipartite: return complete_bipartite(params[0], params[1]);
        case Family::path: return path(n);
        case Family::cycle: return cycle(n);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace thetafree
