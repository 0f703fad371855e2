#include "thetafree/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "thetafree/graph6.hpp"
#include "thetafree/spectral.hpp"

namespace thetafree {

int edge_budget_from_env() {
    const char* raw = std::getenv(kEdgeBudgetEnv);
    if (raw == nullptr || *raw == '\0') return kDefaultEdgeBudget;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 1 || v > 1000) {
        throw std::invalid_argument(std::string(kEdgeBudgetEnv) + " must be a positive integer");
    }
    return static_cast<int>(v);
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = count;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

namespace {

EnumeratedGraph canonical_node(const Graph& g) {
    CanonicalForm cf = canonical_form(g);
    CanonicalLabel label{to_graph6(cf.graph)};
    return {std::move(cf.graph), std::move(label)};
}

std::array<int, kMaxVertices> neighbour_degree_sums(const Graph& g) {
    std::array<int, kMaxVertices> out{};
    for (int v = 0; v < g.order(); ++v) {
        for_each_vertex(g.neighbors(v), [&](int w) { out[v] += g.degree(w); });
    }
    return out;
}

// Cheap isomorphism-invariant edge score; the canonical edge is chosen among maximisers.
std::uint64_t edge_key(const Graph& g, const std::array<int, kMaxVertices>& nbsum, int u, int v) {
    const std::uint64_t du = g.degree(u);
    const std::uint64_t dv = g.degree(v);
    const std::uint64_t common = popcount(g.neighbors(u) & g.neighbors(v));
    return ((std::min(du, dv) * 64 + std::max(du, dv)) * 64 + common) * 16384 + nbsum[u] + nbsum[v];
}

std::uint64_t vertex_key(const Graph& g, const std::array<int, kMaxVertices>& nbsum, int v) {
    return static_cast<std::uint64_t>(g.degree(v)) * 16384 + nbsum[v];
}

bool in_graph6_order_after(int a1, int b1, int a2, int b2) {
    // pair (a1, b1) comes after (a2, b2) in the graph6 bit order (column-major upper triangle)
    const int hi1 = std::max(a1, b1), lo1 = std::min(a1, b1);
    const int hi2 = std::max(a2, b2), lo2 = std::min(a2, b2);
    return hi1 != hi2 ? hi1 > hi2 : lo1 > lo2;
}

class EdgeAugmenter {
public:
    EdgeAugmenter(int target, const EnumerationOptions& options) : target_(target), options_(options) {}

    bool admit(const Graph& g) const { return !options_.hereditary_filter || options_.hereditary_filter(g); }

    template <typename Emit>
    void children(const EnumeratedGraph& parent, Emit&& emit) const {
        const Graph& p = parent.graph;
        const int n = p.order();
        std::unordered_set<std::string> seen;

        auto consider = [&](const Graph& child, int u, int v) {
            const auto nbsum = neighbour_degree_sums(child);
            const std::uint64_t key = edge_key(child, nbsum, u, v);
            int ties = 0;
            for (auto [a, b] : child.edges()) {
                const std::uint64_t k = edge_key(child, nbsum, a, b);
                if (k > key) return;
                if (k == key) ++ties;
            }

            CanonicalForm cf = canonical_form(child);
            if (ties > 1) {
                int best_a = -1, best_b = -1;
                for (auto [a, b] : child.edges()) {
                    if (edge_key(child, nbsum, a, b) != key) continue;
                    if (best_a < 0 || in_graph6_order_after(cf.position[a], cf.position[b], cf.position[best_a],
                                                            cf.position[best_b])) {
                        best_a = a;
                        best_b = b;
                    }
                }
                const bool same_edge = (best_a == u && best_b == v) || (best_a == v && best_b == u);
                if (!same_edge) {
                    const Graph reduced = drop_isolated(child.without_edge(best_a, best_b));
                    if (canonical_label(reduced) != parent.label) return;
                }
            }
            CanonicalLabel label{to_graph6(cf.graph)};
            if (!seen.insert(label.bytes).second) return;
            if (!admit(cf.graph)) return;
            emit(EnumeratedGraph{std::move(cf.graph), std::move(label)});
        };

        for (int v = 1; v < n; ++v) {
            for (int u = 0; u < v; ++u) {
                if (!p.has_edge(u, v)) consider(p.with_edge(u, v), u, v);
            }
        }
        if (n + 1 <= kMaxVertices) {
            const Graph grown = p.add_vertices(1);
            for (int u = 0; u < n; ++u) consider(grown.with_edge(u, n), u, n);
        }
        if (n + 2 <= kMaxVertices) consider(p.add_vertices(2).with_edge(n, n + 1), n, n + 1);
    }

    void descend(const EnumeratedGraph& node, int level, std::vector<EnumeratedGraph>& out) const {
        if (level == target_) {
            if (!options_.connected_only || is_connected(node.graph)) out.push_back(node);
            return;
        }
        children(node, [&](EnumeratedGraph&& child) { descend(child, level + 1, out); });
    }

private:
    int target_;
    const EnumerationOptions& options_;
};

void sort_by_label(std::vector<EnumeratedGraph>& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
}

}  // namespace

std::vector<EnumeratedGraph> enumerate_by_edges(int m, const EnumerationOptions& options) {
    if (m < 1) throw std::invalid_argument("enumerate_by_edges: m must be at least 1");
    if (m > options.edge_budget) {
        throw BudgetExceeded("enumerate_by_edges: m=" + std::to_string(m) + " exceeds the edge budget of " +
                             std::to_string(options.edge_budget));
    }
    const EdgeAugmenter aug(m, options);

    std::vector<EnumeratedGraph> frontier;
    const EnumeratedGraph root = canonical_node(Graph::from_edges(2, {{0, 1}}));
    if (aug.admit(root.graph)) frontier.push_back(root);
    int level = 1;
    // Split the augmentation tree once there is enough work to share out.
    const std::size_t wanted = options.threads > 1 ? static_cast<std::size_t>(options.threads) * 16 : 1;
    while (level < m && frontier.size() < wanted) {
        std::vector<EnumeratedGraph> next;
        for (const auto& node : frontier) aug.children(node, [&](EnumeratedGraph&& c) { next.push_back(std::move(c)); });
        frontier = std::move(next);
        ++level;
    }

    std::vector<std::vector<EnumeratedGraph>> parts(frontier.size());
    parallel_for(frontier.size(), options.threads, [&](std::size_t i) { aug.descend(frontier[i], level, parts[i]); });

    std::vector<EnumeratedGraph> out;
    for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
    sort_by_label(out);
    return out;
}

std::vector<EnumeratedGraph> enumerate_by_order(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_by_order: n must be at least 1");
    if (n > kMaxCountedOrder + 1) throw BudgetExceeded("enumerate_by_order: n exceeds the order budget");

    std::vector<EnumeratedGraph> level{canonical_node(Graph(1))};
    for (int k = 1; k < n; ++k) {
        std::vector<EnumeratedGraph> next;
        for (const auto& parent : level) {
            const Graph base = parent.graph.add_vertices(1);
            std::unordered_set<std::string> seen;
            for (VertexSet s = 0; s < bit(k); ++s) {
                Graph child = base;
                for_each_vertex(s, [&](int u) { child = child.with_edge(u, k); });

                const auto nbsum = neighbour_degree_sums(child);
                const std::uint64_t key = vertex_key(child, nbsum, k);
                int ties = 0;
                bool dominated = false;
                for (int v = 0; v <= k; ++v) {
                    const std::uint64_t kv = vertex_key(child, nbsum, v);
                    if (kv > key) dominated = true;
                    if (kv == key) ++ties;
                }
                if (dominated) continue;

                CanonicalForm cf = canonical_form(child);
                if (ties > 1) {
                    int chosen = -1;
                    for (int v = 0; v <= k; ++v) {
                        if (vertex_key(child, nbsum, v) != key) continue;
                        if (chosen < 0 || cf.position[v] > cf.position[chosen]) chosen = v;
                    }
                    if (chosen != k && canonical_label(induced(child, child.vertices() & ~bit(chosen))) != parent.label) {
                        continue;
                    }
                }
                CanonicalLabel label{to_graph6(cf.graph)};
                if (!seen.insert(label.bytes).second) continue;
                next.push_back({std::move(cf.graph), std::move(label)});
            }
        }
        level = std::move(next);
    }
    sort_by_label(level);
    return level;
}

long count_connected_by_order(int n) {
    if (n < 1) throw std::invalid_argument("count_connected_by_order: n must be at least 1");
    if (n > kMaxCountedOrder) {
        throw BudgetExceeded("count_connected_by_order: n=" + std::to_string(n) + " exceeds the budget of " +
                             std::to_string(kMaxCountedOrder));
    }
    const auto all = enumerate_by_order(n);
    return std::count_if(all.begin(), all.end(), [](const auto& e) { return is_connected(e.graph); });
}

namespace {

bool ranks_before(const RankedGraph& a, const RankedGraph& b) {
    if (a.graph.order() != b.graph.order()) return a.graph.order() < b.graph.order();
    return a.label < b.label;
}

}  // namespace

ExtremalRecord extremal_search(int m, const ThetaSpec& spec, const SearchOptions& options) {
    EnumerationOptions eo;
    eo.connected_only = options.connected_only;
    eo.threads = options.threads;
    eo.edge_budget = options.edge_budget;
    eo.hereditary_filter = [spec](const Graph& g) { return is_theta_free(g, spec); };
    auto classes = enumerate_by_edges(m, eo);
    if (classes.empty()) throw std::logic_error("extremal_search: no spec-free graph found");

    std::vector<RankedGraph> pool(classes.size());
    parallel_for(classes.size(), options.threads, [&](std::size_t i) {
        pool[i].lambda = largest_eigenvalue(classes[i].graph);
        pool[i].graph = std::move(classes[i].graph);
        pool[i].label = std::move(classes[i].label);
    });

    ExtremalRecord rec;
    rec.m = m;
    rec.spec = spec;
    rec.connected_only = options.connected_only;
    rec.num_candidates = static_cast<long>(pool.size());

    // Repeatedly take the top lambda cluster (within 1e-9) and its tie-break winner.
    std::vector<RankedGraph> ranked;
    const std::size_t want = 1 + static_cast<std::size_t>(std::max(options.runner_ups, 0));
    while (ranked.size() < want && !pool.empty()) {
        double top = pool.front().lambda;
        for (const auto& c : pool) top = std::max(top, c.lambda);
        std::size_t pick = pool.size();
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (pool[i].lambda < top - 1e-9) continue;
            if (pick == pool.size() || ranks_before(pool[i], pool[pick])) pick = i;
        }
        ranked.push_back(std::move(pool[pick]));
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    rec.best = std::move(ranked.front());
    rec.runner_ups.assign(std::make_move_iterator(ranked.begin() + 1), std::make_move_iterator(ranked.end()));
    return rec;
}

std::vector<TableRow> extremal_table(std::span<const int> edge_counts, const ThetaSpec& spec,
                                     const SearchOptions& options) {
    std::vector<TableRow> rows;
    for (int m : edge_counts) {
        const ExtremalRecord rec = extremal_search(m, spec, options);
        TableRow row;
        row.m = m;
        row.best_lambda = rec.best.lambda;
        row.bound = bound_value(m);
        row.gap = row.bound - row.best_lambda;
        row.best_graph6 = rec.best.label.bytes;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace thetafree
