#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetafree/graph.hpp"
#include "thetafree/spectral.hpp"
#include "thetafree/theta.hpp"

namespace thetafree {

enum class ComponentKind { star, star_plus_edge, path, cycle, k4, k4_minus_edge, other };

/// Isomorphism class of a non-trivial component of G[U].
struct ComponentClass {
    ComponentKind kind = ComponentKind::other;
    int param = 0;  // r for Star(r), k for Path(k), l for Cycle(l); 0 otherwise

    /// "Star(3)", "K1,3+e", "Path(4)", "Cycle(5)", "K4", "K4-e" or "Other".
    std::string to_string() const;

    friend bool operator==(const ComponentClass&, const ComponentClass&) = default;
};

/// Classifies a connected graph with at least one edge. Stars take precedence, so K2 is
/// Star(1), P3 is Star(2) and K3 is Cycle(3); Path(k) is used for k >= 4 only.
ComponentClass classify_component(const Graph& h);

/// True if g has a cycle of length at least four, i.e. some block has four or more vertices.
bool has_long_cycle(const Graph& g);

struct Component {
    VertexSet vertices = 0;
    ComponentClass cls;
    VertexSet w_neighbors = 0;  // W_H = N_W(V(H))
    bool long_cycle = false;
};

struct EdgeLedger {
    int size_u = 0;   // |U|
    int e_uplus = 0;  // e(U+)
    int e_uw = 0;     // e(U, W)
    int e_w = 0;      // e(W)
    int m = 0;

    bool balanced() const { return m == size_u + e_uplus + e_uw + e_w; }
};

struct DecompositionReport {
    int ustar = 0;
    VertexSet u = 0;      // N(u*)
    VertexSet w = 0;      // V \ N[u*]
    VertexSet u0 = 0;     // isolated vertices of G[U]
    VertexSet uplus = 0;  // U \ U0
    std::vector<Component> components;  // non-trivial components of G[U], by least vertex
    EdgeLedger ledger;
};

/// Decomposition around u* = extremal_vertex(res). g must be connected.
DecompositionReport decompose(const Graph& g, const SpectralResult& res);

/// Decomposition around an arbitrary vertex.
DecompositionReport decompose_at(const Graph& g, int ustar);

struct LemmaEntry {
    std::string id;
    std::string description;
    bool holds = true;
    bool informational = false;  // hypothesis only meaningful for a true maximiser
    std::vector<int> witness;    // offending vertices when the entry fails
};

using LemmaChecklist = std::vector<LemmaEntry>;

/// Evaluates each structural conclusion about the extremal graph on g. Failures are reported,
/// not raised. Throws std::invalid_argument if g contains theta(2,2,3).
LemmaChecklist check_lemma_conclusions(const Graph& g, const DecompositionReport& report);

struct InequalityCheck {
    bool applicable = false;  // lambda^2 - lambda >= m - 1 (within 1e-9)
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // lhs - rhs
};

/// lhs = sum_{U+} (d_U(u) - 1) x_u/x_u* + sum_W d_U(w) x_w/x_u*,
/// rhs = e(U+) + e(U,W) + e(W) + sum_{U0} x_u/x_u* - 1.
InequalityCheck inequality_one_check(const Graph& g, const DecompositionReport& report, const SpectralResult& res);

/// Smallest edge count covered by the spectral bound for theta(2,2,3)-free graphs.
inline constexpr int kTheoremMinEdges = 57;

/// Two adjacent hubs of degree (m+1)/2 with every other vertex of degree 2 joined to both.
bool is_book(const Graph& g);

struct Certificate {
    std::string graph6;
    int m = 0;
    bool connected = false;
    std::optional<double> lambda;
    std::optional<double> bound;
    ThetaSpec spec{2, 2, 3};
    bool theta_free = false;
    std::optional<ThetaWitness> witness;
    std::optional<DecompositionReport> decomposition;
    std::optional<IdentityResiduals> identities;
    std::optional<LemmaChecklist> lemmas;
    std::optional<InequalityCheck> inequality1;
    bool equality_claimed = false;
    std::optional<bool> iso_to_book;  // set only when the bound comparison ran
};

/// Freeness (with witness), spectral radius, bound comparison and, at equality, the book
/// structure test. Connected theta(2,2,3)-free inputs also get the decomposition, lemma
/// checklist and inequality check. Never throws for a valid graph.
Certificate verify_theorem_instance(const Graph& g, const ThetaSpec& spec = ThetaSpec(2, 2, 3));

}  // namespace thetafree
