#include "thetafree/graph.hpp"

#include <algorithm>

namespace thetafree {

std::vector<int> to_vector(VertexSet s) {
    std::vector<int> out;
    out.reserve(popcount(s));
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

VertexSet to_set(std::span<const int> vertices) {
    VertexSet s = 0;
    for (int v : vertices) {
        if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex id out of range");
        s |= bit(v);
    }
    return s;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices) {
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 0.." +
                                    std::to_string(kMaxVertices));
    }
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check(u);
        g.check(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (g.has_edge(u, v)) continue;
        g.adj_[u] |= bit(v);
        g.adj_[v] |= bit(u);
        ++g.m_;
    }
    return g;
}

Graph Graph::with_edge(int u, int v) const {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    Graph g = *this;
    if (!g.has_edge(u, v)) {
        g.adj_[u] |= bit(v);
        g.adj_[v] |= bit(u);
        ++g.m_;
    }
    return g;
}

Graph Graph::add_vertices(int count) const {
    if (count < 0 || n_ + count > kMaxVertices) throw std::invalid_argument("add_vertices: exceeds the vertex budget");
    Graph g = *this;
    g.n_ += count;
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    Graph g = *this;
    if (g.has_edge(u, v)) {
        g.adj_[u] &= ~bit(v);
        g.adj_[v] &= ~bit(u);
        --g.m_;
    }
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
        for_each_vertex(adj_[u] & ~first_n(u + 1), [&](int v) { out.emplace_back(u, v); });
    }
    return out;
}

int min_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    int d = kMaxVertices;
    for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
    return d;
}

std::vector<int> degrees(const Graph& g) {
    std::vector<int> out(g.order());
    for (int v = 0; v < g.order(); ++v) out[v] = g.degree(v);
    return out;
}

namespace {

VertexSet reach(const Graph& g, int start, VertexSet within) {
    VertexSet seen = bit(start);
    VertexSet frontier = seen;
    while (frontier != 0) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    return reach(g, 0, g.vertices()) == g.vertices();
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
    within &= g.vertices();
    std::vector<VertexSet> out;
    while (within != 0) {
        VertexSet c = reach(g, std::countr_zero(within), within);
        out.push_back(c);
        within &= ~c;
    }
    return out;
}

Graph induced(const Graph& g, VertexSet s) {
    if ((s & ~g.vertices()) != 0) throw std::out_of_range("induced: vertex set exceeds graph");
    std::array<int, kMaxVertices> index{};
    int k = 0;
    for_each_vertex(s, [&](int v) { index[v] = k++; });
    std::vector<std::pair<int, int>> edges;
    for_each_vertex(s, [&](int u) {
        for_each_vertex(g.neighbors(u) & s & ~first_n(u + 1),
                        [&](int v) { edges.emplace_back(index[u], index[v]); });
    });
    return Graph::from_edges(k, edges);
}

int edge_count_between(const Graph& g, VertexSet x, VertexSet y) {
    if (((x | y) & ~g.vertices()) != 0) throw std::out_of_range("edge_count_between: vertex set exceeds graph");
    int ordered = 0;
    for_each_vertex(x, [&](int u) { ordered += popcount(g.neighbors(u) & y); });
    // edges inside x & y were counted from both ends
    VertexSet both = x & y;
    int doubled = 0;
    for_each_vertex(both, [&](int u) { doubled += popcount(g.neighbors(u) & both); });
    return ordered - doubled / 2;
}

Graph drop_isolated(const Graph& g) {
    VertexSet keep = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (g.neighbors(v) != 0) keep |= bit(v);
    }
    return keep == g.vertices() ? g : induced(g, keep);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.size());
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.order(), edges);
}

bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        if ((g.neighbors(u) & g.neighbors(v)) != 0) return false;
    }
    return true;
}

std::vector<int> bipartition(const Graph& g) {
    std::vector<int> side(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            bool bad = false;
            for_each_vertex(g.neighbors(v), [&](int w) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    bad = true;
                }
            });
            if (bad) return {};
        }
    }
    return side;
}

}  // namespace thetafree
