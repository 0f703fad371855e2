#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thetafree/graph.hpp"

namespace thetafree {

/// Path lengths (r, p, q) of a theta graph, normalised to q >= p >= r >= 1 with p >= 2.
class ThetaSpec {
public:
    /// Accepts the three lengths in any order.
    ThetaSpec(int a, int b, int c);

    /// Parses "R,P,Q".
    static ThetaSpec parse(std::string_view text);

    int r() const { return r_; }
    int p() const { return p_; }
    int q() const { return q_; }
    std::array<int, 3> lengths() const { return {r_, p_, q_}; }

    /// Vertices of the theta graph: two hubs plus (r-1)+(p-1)+(q-1) internal vertices.
    int vertex_count() const { return r_ + p_ + q_ - 1; }
    int edge_count() const { return r_ + p_ + q_; }

    std::string to_string() const;

    friend bool operator==(const ThetaSpec&, const ThetaSpec&) = default;

private:
    int r_;
    int p_;
    int q_;
};

/// The theta graph itself: hubs 0 and 1, then the internal vertices of the r, p and q paths.
Graph theta_graph(const ThetaSpec& spec);

struct ThetaWitness {
    int hub_a;
    int hub_b;
    std::array<std::vector<int>, 3> paths;  // hub_a .. hub_b, lengths r, p, q

    friend bool operator==(const ThetaWitness&, const ThetaWitness&) = default;
};

/// Searches hub pairs (a < b) in lexicographic order and, for each, simple a-b paths of length
/// r, then p avoiding the first path's interior, then q avoiding both; neighbours are tried in
/// ascending order. Subgraph semantics: chords are allowed.
std::optional<ThetaWitness> contains_theta(const Graph& g, const ThetaSpec& spec);

inline bool is_theta_free(const Graph& g, const ThetaSpec& spec) { return !contains_theta(g, spec).has_value(); }

/// Empty string if the witness is a theta subgraph of g with the given lengths, else the reason.
std::string validate_witness(const Graph& g, const ThetaSpec& spec, const ThetaWitness& w);

struct DoubleStarWitness {
    int u;
    int v;
    int leaf_u;
    int leaf_v1;
    int leaf_v2;
};

/// Double star S_{1,2}: an edge uv, one further neighbour of u and two of v, five distinct vertices.
std::optional<DoubleStarWitness> contains_double_star(const Graph& g);
std::optional<DoubleStarWitness> contains_double_star(const Graph& g, VertexSet within);

/// Largest host order accepted by the brute-force oracle.
inline constexpr int kOracleMaxOrder = 10;

/// Decides containment by trying every injection of the theta graph's vertices into V(g).
/// Independent of contains_theta; throws std::invalid_argument when g.order() > 10.
bool oracle_contains_theta(const Graph& g, const ThetaSpec& spec);

/// Generic brute-force subgraph test (injection backtracking). Same size guard.
bool oracle_contains_subgraph(const Graph& host, const Graph& pattern);

}  // namespace thetafree
