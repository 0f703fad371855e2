#pragma once

#include <compare>
#include <string>
#include <vector>

#include "thetafree/graph.hpp"

namespace thetafree {

/// Certificate of an isomorphism class: the graph6 encoding of the canonical form.
///
/// Labels of different orders compare by order first (the graph6 header byte leads).
struct CanonicalLabel {
    std::string bytes;

    friend auto operator<=>(const CanonicalLabel&, const CanonicalLabel&) = default;
};

struct CanonicalForm {
    Graph graph;                // g relabelled into canonical order
    std::vector<int> position;  // position[v] = canonical index of vertex v of the input
};

/// Canonical form via equitable refinement and individualization-refinement search.
///
/// Among all leaves of the search tree the relabelling with the lexicographically least
/// upper-triangle adjacency string (graph6 bit order) wins, so isomorphic inputs map to the
/// identical graph. Automorphisms discovered at equivalent leaves prune the tree.
CanonicalForm canonical_form(const Graph& g);

CanonicalLabel canonical_label(const Graph& g);

/// True if a's graph6 bit string precedes b's. Both graphs must have the same order.
bool adjacency_less(const Graph& a, const Graph& b);

/// Coarsest equitable ordered partition refining `cells`.
///
/// Cells split by their members' neighbour counts into every current cell; fragments are
/// ordered by that count vector, so the result is an isomorphism-invariant function of
/// (g, cells).
std::vector<VertexSet> refine(const Graph& g, std::vector<VertexSet> cells);

}  // namespace thetafree
