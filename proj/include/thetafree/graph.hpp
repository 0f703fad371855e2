#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thetafree {

/// A set of vertex ids packed into one machine word. Bit v is set iff v is in the set.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet first_n(int n) {
    return n >= kMaxVertices ? ~VertexSet{0} : bit(n) - 1;
}

constexpr int popcount(VertexSet s) { return std::popcount(s); }

constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

/// Calls fn(v) for every member of s in increasing order.
template <typename Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
    while (s != 0) {
        fn(std::countr_zero(s));
        s &= s - 1;
    }
}

std::vector<int> to_vector(VertexSet s);
VertexSet to_set(std::span<const int> vertices);

/// Simple undirected graph on vertices 0..n-1, n <= 64, one bitset row per vertex.
///
/// Instances are immutable; with_edge() and friends return modified copies.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
    }

    int order() const { return n_; }
    int size() const { return m_; }

    VertexSet vertices() const { return first_n(n_); }
    VertexSet neighbors(int v) const { return adj_[check(v)]; }
    int degree(int v) const { return popcount(adj_[check(v)]); }
    bool has_edge(int u, int v) const { return contains(adj_[check(u)], check(v)); }

    Graph with_edge(int u, int v) const;
    /// Copy with `count` isolated vertices appended.
    Graph add_vertices(int count) const;
    Graph without_edge(int u, int v) const;

    /// Edges (u, v) with u < v, ordered by u then v.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int check(int v) const {
        if (v < 0 || v >= n_) {
            throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                                    std::to_string(n_ - 1));
        }
        return v;
    }

    int n_ = 0;
    int m_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

// Structure queries.

int min_degree(const Graph& g);
int max_degree(const Graph& g);
std::vector<int> degrees(const Graph& g);
bool is_connected(const Graph& g);

/// Connected components of g[within], each as a vertex set, ordered by least member.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

/// Induced subgraph g[s], relabelled so the members of s map to 0..|s|-1 in increasing order.
Graph induced(const Graph& g, VertexSet s);

/// Number of edges with one end in x and the other in y. For x == y this is e(x), each
/// internal edge counted once.
int edge_count_between(const Graph& g, VertexSet x, VertexSet y);
inline int edge_count(const Graph& g, VertexSet x) { return edge_count_between(g, x, x); }

/// Number of neighbours of v inside s.
inline int degree_into(const Graph& g, int v, VertexSet s) { return popcount(g.neighbors(v) & s); }

/// Removes isolated vertices, keeping the relative order of the rest.
Graph drop_isolated(const Graph& g);

/// Applies a vertex relabelling: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

bool is_triangle_free(const Graph& g);

/// Proper two-colouring of a connected graph; side[v] in {0,1}. Empty if g has an odd cycle.
std::vector<int> bipartition(const Graph& g);

}  // namespace thetafree
