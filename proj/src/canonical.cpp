#include "thetafree/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>

#include "thetafree/graph6.hpp"

namespace thetafree {

bool adjacency_less(const Graph& a, const Graph& b) {
    for (int j = 1; j < a.order(); ++j) {
        const VertexSet ca = a.neighbors(j) & first_n(j);
        const VertexSet cb = b.neighbors(j) & first_n(j);
        if (ca != cb) return !contains(ca, std::countr_zero(ca ^ cb));
    }
    return false;
}

std::vector<VertexSet> refine(const Graph& g, std::vector<VertexSet> cells) {
    using Signature = std::array<std::uint8_t, kMaxVertices>;
    std::array<Signature, kMaxVertices> sig;
    std::vector<VertexSet> next;
    std::vector<int> members;
    next.reserve(g.order());
    members.reserve(g.order());

    while (true) {
        const std::size_t k = cells.size();
        next.clear();
        for (VertexSet cell : cells) {
            if (popcount(cell) == 1) {
                next.push_back(cell);
                continue;
            }
            members.clear();
            for_each_vertex(cell, [&](int v) {
                const VertexSet row = g.neighbors(v);
                for (std::size_t c = 0; c < k; ++c) sig[v][c] = static_cast<std::uint8_t>(popcount(row & cells[c]));
                members.push_back(v);
            });
            auto cmp = [&](int a, int b) { return std::memcmp(sig[a].data(), sig[b].data(), k) < 0; };
            std::stable_sort(members.begin(), members.end(), cmp);
            VertexSet fragment = bit(members[0]);
            for (std::size_t i = 1; i < members.size(); ++i) {
                if (cmp(members[i - 1], members[i])) {
                    next.push_back(fragment);
                    fragment = 0;
                }
                fragment |= bit(members[i]);
            }
            next.push_back(fragment);
        }
        if (next.size() == k) return cells;
        std::swap(cells, next);
    }
}

namespace {

struct Leaf {
    Graph graph;
    std::vector<int> position;
    std::vector<int> path;
};

class Search {
public:
    explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalForm run() {
        std::vector<VertexSet> cells;
        if (n_ > 0) cells.push_back(g_.vertices());
        std::vector<int> path;
        explore(refine(g_, std::move(cells)), path);
        return {best_.graph, best_.position};
    }

private:
    static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
        const auto stop = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
        return static_cast<int>(stop.first - a.begin());
    }

    // Maps each vertex of `from` to the vertex holding the same canonical position in `to`.
    std::vector<int> automorphism(const Leaf& from, const std::vector<int>& to_position) const {
        std::vector<int> at(n_);
        for (int v = 0; v < n_; ++v) at[to_position[v]] = v;
        std::vector<int> gamma(n_);
        for (int v = 0; v < n_; ++v) gamma[v] = at[from.position[v]];
        return gamma;
    }

    // Returns the depth to unwind to, or -1 to continue normally.
    int leaf(const std::vector<VertexSet>& cells, const std::vector<int>& path) {
        std::vector<int> position(n_);
        for (int i = 0; i < n_; ++i) position[std::countr_zero(cells[i])] = i;
        Graph relabelled = relabel(g_, position);

        if (!have_first_) {
            have_first_ = true;
            first_ = {relabelled, position, path};
            best_ = first_;
            return -1;
        }
        if (relabelled == first_.graph) {
            generators_.push_back(automorphism(first_, position));
            return common_prefix(path, first_.path);
        }
        if (relabelled == best_.graph) {
            generators_.push_back(automorphism(best_, position));
            return common_prefix(path, best_.path);
        }
        if (adjacency_less(relabelled, best_.graph)) best_ = {std::move(relabelled), std::move(position), path};
        return -1;
    }

    // Orbit representatives under the automorphisms found so far that fix `path` pointwise.
    std::vector<int> orbit_roots(const std::vector<int>& path) const {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (const auto& gamma : generators_) {
            const bool fixes = std::all_of(path.begin(), path.end(), [&](int v) { return gamma[v] == v; });
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                const int a = find(v);
                const int b = find(gamma[v]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (int v = 0; v < n_; ++v) parent[v] = find(v);
        return parent;
    }

    int explore(const std::vector<VertexSet>& cells, std::vector<int>& path) {
        const int depth = static_cast<int>(path.size());
        if (static_cast<int>(cells.size()) == n_) return leaf(cells, path);

        std::size_t target = 0;
        while (popcount(cells[target]) == 1) ++target;

        VertexSet done_roots = 0;
        std::size_t seen_generators = generators_.size();
        std::vector<int> roots = orbit_roots(path);
        for (int v : to_vector(cells[target])) {
            if (generators_.size() != seen_generators) {
                roots = orbit_roots(path);
                seen_generators = generators_.size();
                VertexSet rebased = 0;
                for_each_vertex(done_roots, [&](int u) { rebased |= bit(roots[u]); });
                done_roots = rebased;
            }
            if (contains(done_roots, roots[v])) continue;

            std::vector<VertexSet> child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + target);
            child.push_back(bit(v));
            child.push_back(cells[target] & ~bit(v));
            child.insert(child.end(), cells.begin() + target + 1, cells.end());

            path.push_back(v);
            const int jump = explore(refine(g_, std::move(child)), path);
            path.pop_back();
            done_roots |= bit(roots[v]);
            if (jump >= 0 && jump < depth) return jump;
        }
        return -1;
    }

    const Graph& g_;
    const int n_;
    bool have_first_ = false;
    Leaf first_;
    Leaf best_;
    std::vector<std::vector<int>> generators_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.order() == 0) return {g, {}};
    return Search(g).run();
}

CanonicalLabel canonical_label(const Graph& g) { return {to_graph6(canonical_form(g).graph)}; }

}  // namespace thetafree
