#include "thetafree/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "thetafree/graph6.hpp"

namespace thetafree {

std::string ComponentClass::to_string() const {
    switch (kind) {
        case ComponentKind::star: return "Star(" + std::to_string(param) + ")";
        case ComponentKind::star_plus_edge: return "K1,3+e";
        case ComponentKind::path: return "Path(" + std::to_string(param) + ")";
        case ComponentKind::cycle: return "Cycle(" + std::to_string(param) + ")";
        case ComponentKind::k4: return "K4";
        case ComponentKind::k4_minus_edge: return "K4-e";
        case ComponentKind::other: return "Other";
    }
    return "Other";
}

ComponentClass classify_component(const Graph& h) {
    const int n = h.order();
    const int m = h.size();
    if (n < 2 || m == 0 || !is_connected(h)) return {};
    const int top = max_degree(h);
    if (m == n - 1 && top == n - 1) return {ComponentKind::star, n - 1};
    if (m == n - 1 && top <= 2) return {ComponentKind::path, n};
    if (m == n && top == 2) return {ComponentKind::cycle, n};
    if (n == 4 && m == 6) return {ComponentKind::k4, 0};
    if (n == 4 && m == 5) return {ComponentKind::k4_minus_edge, 0};
    if (n == 4 && m == 4 && top == 3) return {ComponentKind::star_plus_edge, 0};
    return {};
}

bool has_long_cycle(const Graph& g) {
    const int n = g.order();
    std::vector<int> disc(n, -1);
    std::vector<int> low(n, 0);
    std::vector<int> stack;
    int clock = 0;
    bool found = false;

    // Biconnected components by lowpoint; a block with >= 4 vertices holds a cycle of length >= 4.
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[v] = low[v] = clock++;
        stack.push_back(v);
        for_each_vertex(g.neighbors(v), [&](int w) {
            if (found) return;
            if (disc[w] == -1) {
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    int block = 1;  // v itself
                    while (true) {
                        const int x = stack.back();
                        stack.pop_back();
                        ++block;
                        if (x == w) break;
                    }
                    if (block >= 4) found = true;
                }
            } else if (w != parent) {
                low[v] = std::min(low[v], disc[w]);
            }
        });
    };
    for (int v = 0; v < n && !found; ++v) {
        if (disc[v] == -1) {
            dfs(v, -1);
            stack.clear();
        }
    }
    return found;
}

DecompositionReport decompose_at(const Graph& g, int ustar) {
    if (!is_connected(g)) throw DisconnectedGraphError("decompose: graph is disconnected");
    DecompositionReport r;
    r.ustar = ustar;
    r.u = g.neighbors(ustar);
    r.w = g.vertices() & ~r.u & ~bit(ustar);
    for_each_vertex(r.u, [&](int v) {
        if ((g.neighbors(v) & r.u) == 0) {
            r.u0 |= bit(v);
        } else {
            r.uplus |= bit(v);
        }
    });
    for (VertexSet c : components(g, r.uplus)) {
        const Graph h = induced(g, c);
        Component comp;
        comp.vertices = c;
        comp.cls = classify_component(h);
        for_each_vertex(c, [&](int v) { comp.w_neighbors |= g.neighbors(v) & r.w; });
        comp.long_cycle = has_long_cycle(h);
        r.components.push_back(comp);
    }
    r.ledger.size_u = popcount(r.u);
    r.ledger.e_uplus = edge_count(g, r.uplus);
    r.ledger.e_uw = edge_count_between(g, r.u, r.w);
    r.ledger.e_w = edge_count(g, r.w);
    r.ledger.m = g.size();
    return r;
}

DecompositionReport decompose(const Graph& g, const SpectralResult& res) {
    return decompose_at(g, extremal_vertex(res));
}

LemmaChecklist check_lemma_conclusions(const Graph& g, const DecompositionReport& r) {
    if (contains_theta(g, ThetaSpec(2, 2, 3))) {
        throw std::invalid_argument("check_lemma_conclusions: graph contains theta(2,2,3)");
    }
    LemmaChecklist out;
    auto add = [&](std::string id, std::string description) -> LemmaEntry& {
        out.push_back({std::move(id), std::move(description), true, false, {}});
        return out.back();
    };

    {
        auto& e = add("min_degree_outside", "d(u) >= 2 for every u outside N[u*]");
        for_each_vertex(r.w, [&](int v) {
            if (g.degree(v) < 2) e.witness.push_back(v);
        });
        e.holds = e.witness.empty();
    }
    {
        auto& e = add("no_double_star", "G[U] contains no double star S_{1,2}");
        if (auto ds = contains_double_star(g, r.u)) {
            e.holds = false;
            e.witness = {ds->u, ds->v, ds->leaf_u, ds->leaf_v1, ds->leaf_v2};
        }
    }
    {
        auto& e = add("long_cycle_w_degree", "d_U(w) <= 2 for w in W_H when H has a cycle of length >= 4");
        e.informational = true;
        for (const auto& c : r.components) {
            if (!c.long_cycle) continue;
            for_each_vertex(c.w_neighbors, [&](int w) {
                if (degree_into(g, w, r.u) > 2) e.witness.push_back(w);
            });
        }
        e.holds = e.witness.empty();
    }
    auto first_component = [&](LemmaEntry& e, auto&& bad) {
        for (const auto& c : r.components) {
            if (bad(c)) {
                e.holds = false;
                e.witness = to_vector(c.vertices);
                return;
            }
        }
    };
    first_component(add("no_long_cycle", "no component of G[U] contains a cycle of length >= 4"),
                    [](const Component& c) { return c.long_cycle; });
    {
        auto& e = add("w_independent", "e(W) = 0");
        for_each_vertex(r.w, [&](int v) {
            const VertexSet inside = g.neighbors(v) & r.w;
            if (e.holds && inside != 0) {
                e.holds = false;
                e.witness = {v, std::countr_zero(inside)};
            }
        });
    }
    first_component(add("no_k13_plus_e", "no component of G[U] is K_{1,3}+e"),
                    [](const Component& c) { return c.cls.kind == ComponentKind::star_plus_edge; });
    first_component(add("no_triangle_component", "no component of G[U] is C_3"),
                    [](const Component& c) { return c.cls == ComponentClass{ComponentKind::cycle, 3}; });
    first_component(add("no_long_path", "no component of G[U] is P_k with k >= 4"),
                    [](const Component& c) { return c.cls.kind == ComponentKind::path; });
    first_component(add("all_stars", "every non-trivial component of G[U] is a star K_{1,r}"),
                    [](const Component& c) { return c.cls.kind != ComponentKind::star; });
    return out;
}

InequalityCheck inequality_one_check(const Graph& g, const DecompositionReport& r, const SpectralResult& res) {
    const auto& x = res.perron;
    const double xs = x[r.ustar];
    const int m = g.size();
    InequalityCheck out;
    out.applicable = res.lambda * res.lambda - res.lambda >= (m - 1) - 1e-9;

    for_each_vertex(r.uplus, [&](int v) { out.lhs += (degree_into(g, v, r.u) - 1) * x[v] / xs; });
    for_each_vertex(r.w, [&](int v) { out.lhs += degree_into(g, v, r.u) * x[v] / xs; });

    out.rhs = r.ledger.e_uplus + r.ledger.e_uw + r.ledger.e_w - 1.0;
    for_each_vertex(r.u0, [&](int v) { out.rhs += x[v] / xs; });
    out.slack = out.lhs - out.rhs;
    return out;
}

bool is_book(const Graph& g) {
    const int m = g.size();
    if (m < 3 || m % 2 == 0) return false;
    const int k = (m - 1) / 2;
    if (g.order() != k + 2) return false;
    std::vector<int> hubs;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == k + 1) hubs.push_back(v);
    }
    if (hubs.size() < 2) return false;
    const int a = hubs[0];
    const int b = hubs[1];
    if (!g.has_edge(a, b)) return false;
    const VertexSet both = bit(a) | bit(b);
    for (int v = 0; v < g.order(); ++v) {
        if (v != a && v != b && g.neighbors(v) != both) return false;
    }
    return true;
}

Certificate verify_theorem_instance(const Graph& g, const ThetaSpec& spec) {
    Certificate c;
    c.graph6 = to_graph6(g);
    c.m = g.size();
    c.spec = spec;
    c.connected = g.order() >= 1 && is_connected(g);
    c.witness = contains_theta(g, spec);
    c.theta_free = !c.witness.has_value();
    if (g.order() >= 1) c.lambda = largest_eigenvalue(g);
    if (c.m >= 1) c.bound = bound_value(c.m);

    if (c.theta_free && c.lambda && c.bound) {
        c.equality_claimed = std::abs(*c.lambda - *c.bound) <= 1e-9;
        c.iso_to_book = is_book(g);
    }

    const bool lemma_scope = spec == ThetaSpec(2, 2, 3) ? c.theta_free : is_theta_free(g, ThetaSpec(2, 2, 3));
    if (c.connected && g.order() >= 2 && lemma_scope) {
        const SpectralResult res = spectral_radius(g);
        c.decomposition = decompose(g, res);
        c.identities = eigen_identity_check(g, res, c.decomposition->ustar);
        c.lemmas = check_lemma_conclusions(g, *c.decomposition);
        c.inequality1 = inequality_one_check(g, *c.decomposition, res);
    }
    return c;
}

}  // namespace thetafree
