#include "thetafree/theta.hpp"

#include <algorithm>
#include <charconv>

namespace thetafree {

ThetaSpec::ThetaSpec(int a, int b, int c) {
    std::array<int, 3> v{a, b, c};
    std::sort(v.begin(), v.end());
    if (v[0] < 1 || v[1] < 2) {
        throw std::invalid_argument("theta spec " + std::to_string(a) + "," + std::to_string(b) + "," +
                                    std::to_string(c) + " violates q>=p>=r>=1 and p>=2");
    }
    r_ = v[0];
    p_ = v[1];
    q_ = v[2];
    if (vertex_count() > kMaxVertices) throw std::invalid_argument("theta spec exceeds the vertex budget");
}

ThetaSpec ThetaSpec::parse(std::string_view text) {
    std::array<int, 3> v{};
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        const std::size_t end = i < 2 ? text.find(',', pos) : text.size();
        if (end == std::string_view::npos) throw std::invalid_argument("theta spec must look like R,P,Q");
        std::string_view field = text.substr(pos, end - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v[i]);
        if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
            throw std::invalid_argument("theta spec must look like R,P,Q; bad field '" + std::string(field) + "'");
        }
        pos = end + 1;
    }
    return {v[0], v[1], v[2]};
}

std::string ThetaSpec::to_string() const {
    return std::to_string(r_) + "," + std::to_string(p_) + "," + std::to_string(q_);
}

Graph theta_graph(const ThetaSpec& spec) {
    std::vector<std::pair<int, int>> edges;
    int next = 2;
    for (int len : spec.lengths()) {
        int prev = 0;
        for (int step = 1; step < len; ++step) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, 1);
    }
    return Graph::from_edges(spec.vertex_count(), edges);
}

namespace {

// Depth-limited search for simple paths cur -> target of exactly `remaining` edges whose
// interior stays inside `allowed`. `on_path` returns true to stop the search.
template <typename Fn>
bool walk(const Graph& g, int cur, int target, int remaining, VertexSet allowed, std::vector<int>& trail, Fn&& on_path) {
    if (remaining == 1) {
        if (!g.has_edge(cur, target)) return false;
        trail.push_back(target);
        const bool stop = on_path(trail);
        trail.pop_back();
        return stop;
    }
    VertexSet next = g.neighbors(cur) & allowed;
    while (next != 0) {
        const int w = std::countr_zero(next);
        next &= next - 1;
        trail.push_back(w);
        const bool stop = walk(g, w, target, remaining - 1, allowed & ~bit(w), trail, on_path);
        trail.pop_back();
        if (stop) return true;
    }
    return false;
}

VertexSet interior(const std::vector<int>& trail) {
    VertexSet s = 0;
    for (std::size_t i = 1; i + 1 < trail.size(); ++i) s |= bit(trail[i]);
    return s;
}

}  // namespace

std::optional<ThetaWitness> contains_theta(const Graph& g, const ThetaSpec& spec) {
    const int n = g.order();
    if (n < spec.vertex_count() || g.size() < spec.edge_count()) return std::nullopt;
    const auto [r, p, q] = spec.lengths();

    std::optional<ThetaWitness> found;
    for (int a = 0; a < n && !found; ++a) {
        if (g.degree(a) < 3) continue;
        for (int b = a + 1; b < n && !found; ++b) {
            if (g.degree(b) < 3) continue;
            const VertexSet open = g.vertices() & ~bit(a) & ~bit(b);
            std::vector<int> t1{a};
            walk(g, a, b, r, open, t1, [&](const std::vector<int>& first) {
                std::vector<int> t2{a};
                return walk(g, a, b, p, open & ~interior(first), t2, [&](const std::vector<int>& second) {
                    std::vector<int> t3{a};
                    const VertexSet rest = open & ~interior(first) & ~interior(second);
                    return walk(g, a, b, q, rest, t3, [&](const std::vector<int>& third) {
                        found = ThetaWitness{a, b, {first, second, third}};
                        return true;
                    });
                });
            });
        }
    }
    return found;
}

std::string validate_witness(const Graph& g, const ThetaSpec& spec, const ThetaWitness& w) {
    const int n = g.order();
    auto in_range = [n](int v) { return v >= 0 && v < n; };
    if (!in_range(w.hub_a) || !in_range(w.hub_b)) return "hub out of range";
    if (w.hub_a == w.hub_b) return "hubs coincide";
    const auto lengths = spec.lengths();
    VertexSet used = bit(w.hub_a) | bit(w.hub_b);
    for (int i = 0; i < 3; ++i) {
        const auto& path = w.paths[i];
        if (static_cast<int>(path.size()) != lengths[i] + 1) {
            return "path " + std::to_string(i) + " has length " + std::to_string(static_cast<int>(path.size()) - 1) +
                   ", expected " + std::to_string(lengths[i]);
        }
        if (path.front() != w.hub_a || path.back() != w.hub_b) return "path " + std::to_string(i) + " does not join the hubs";
        for (std::size_t k = 0; k < path.size(); ++k) {
            if (!in_range(path[k])) return "path vertex out of range";
            if (k + 1 < path.size() && !g.has_edge(path[k], path[k + 1])) {
                return "path " + std::to_string(i) + " uses non-edge " + std::to_string(path[k]) + "-" +
                       std::to_string(path[k + 1]);
            }
            if (k == 0 || k + 1 == path.size()) continue;
            if (contains(used, path[k])) return "vertex " + std::to_string(path[k]) + " repeated across paths";
            used |= bit(path[k]);
        }
    }
    return {};
}

std::optional<DoubleStarWitness> contains_double_star(const Graph& g, VertexSet within) {
    within &= g.vertices();
    std::optional<DoubleStarWitness> out;
    for_each_vertex(within, [&](int u) {
        if (out) return;
        for_each_vertex(g.neighbors(u) & within, [&](int v) {
            if (out) return;
            const VertexSet leaves_u = g.neighbors(u) & within & ~bit(v);
            const VertexSet leaves_v = g.neighbors(v) & within & ~bit(u);
            for_each_vertex(leaves_u, [&](int a) {
                if (out) return;
                const VertexSet rest = leaves_v & ~bit(a);
                if (popcount(rest) < 2) return;
                const int b = std::countr_zero(rest);
                const int c = std::countr_zero(rest & ~bit(b));
                out = DoubleStarWitness{u, v, a, b, c};
            });
        });
    });
    return out;
}

std::optional<DoubleStarWitness> contains_double_star(const Graph& g) { return contains_double_star(g, g.vertices()); }

namespace {

bool extend(const Graph& host, const Graph& pattern, std::vector<int>& image, VertexSet used) {
    const int i = static_cast<int>(image.size());
    if (i == pattern.order()) return true;
    for (int h = 0; h < host.order(); ++h) {
        if (contains(used, h)) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) {
            if (pattern.has_edge(i, j) && !host.has_edge(h, image[j])) ok = false;
        }
        if (!ok) continue;
        image.push_back(h);
        if (extend(host, pattern, image, used | bit(h))) return true;
        image.pop_back();
    }
    return false;
}

}  // namespace

bool oracle_contains_subgraph(const Graph& host, const Graph& pattern) {
    if (host.order() > kOracleMaxOrder) {
        throw std::invalid_argument("brute-force oracle limited to " + std::to_string(kOracleMaxOrder) + " vertices");
    }
    if (pattern.order() > host.order()) return false;
    std::vector<int> image;
    image.reserve(pattern.order());
    return extend(host, pattern, image, 0);
}

bool oracle_contains_theta(const Graph& g, const ThetaSpec& spec) {
    return oracle_contains_subgraph(g, theta_graph(spec));
}

}  // namespace thetafree
