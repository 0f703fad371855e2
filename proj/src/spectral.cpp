#include "thetafree/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace thetafree {

namespace {

using AdjacencyList = std::vector<std::vector<int>>;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool connected(const AdjacencyList& adj) {
    std::vector<char> seen(adj.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == adj.size();
}

SpectralResult power_iteration(const AdjacencyList& adj, const SpectralOptions& options) {
    const std::size_t n = adj.size();
    if (n == 0) throw std::invalid_argument("spectral_radius: empty graph");
    if (!connected(adj)) throw DisconnectedGraphError("spectral_radius: graph is disconnected");

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> ax(n);
    SpectralResult res;
    for (long it = 1; it <= options.max_iterations; ++it) {
        for (std::size_t v = 0; v < n; ++v) {
            double s = 0.0;
            for (int w : adj[v]) s += x[w];
            ax[v] = s;
        }
        const double lambda = dot(x, ax);
        double residual = 0.0;
        for (std::size_t v = 0; v < n; ++v) residual = std::max(residual, std::abs(ax[v] - lambda * x[v]));
        if (residual <= options.tolerance * std::max(1.0, lambda)) {
            res.lambda = lambda;
            res.perron = std::move(x);
            res.residual = residual;
            res.iterations = it;
            return res;
        }
        // x <- (A + I) x / |(A + I) x|
        for (std::size_t v = 0; v < n; ++v) ax[v] += x[v];
        const double norm = std::sqrt(dot(ax, ax));
        for (std::size_t v = 0; v < n; ++v) x[v] = ax[v] / norm;
    }
    throw ConvergenceError("spectral_radius: no convergence after " + std::to_string(options.max_iterations) +
                           " iterations");
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, const SpectralOptions& options) {
    AdjacencyList adj(g.order());
    for (int v = 0; v < g.order(); ++v) adj[v] = to_vector(g.neighbors(v));
    return power_iteration(adj, options);
}

SpectralResult spectral_radius(int n, std::span<const std::pair<int, int>> edges, const SpectralOptions& options) {
    if (n < 0) throw std::invalid_argument("spectral_radius: negative order");
    AdjacencyList adj(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("spectral_radius: vertex out of range");
        if (u == v) throw std::invalid_argument("spectral_radius: self-loop");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw std::invalid_argument("spectral_radius: repeated edge");
    }
    return power_iteration(adj, options);
}

double largest_eigenvalue(const Graph& g, const SpectralOptions& options) {
    double best = 0.0;
    for (VertexSet c : components(g)) {
        if (popcount(c) < 2) continue;
        best = std::max(best, spectral_radius(induced(g, c), options).lambda);
    }
    return best;
}

int extremal_vertex(const SpectralResult& res, double tie_tolerance) {
    if (res.perron.empty()) throw std::invalid_argument("extremal_vertex: empty Perron vector");
    const double top = *std::max_element(res.perron.begin(), res.perron.end());
    for (std::size_t v = 0; v < res.perron.size(); ++v) {
        if (res.perron[v] >= top - tie_tolerance) return static_cast<int>(v);
    }
    return 0;
}

double bound_value(int m) {
    if (m < 1) throw std::invalid_argument("bound_value: m must be at least 1");
    return (1.0 + std::sqrt(4.0 * m - 3.0)) / 2.0;
}

std::optional<std::pair<int, int>> complete_bipartite_sides(const Graph& g) {
    if (g.order() < 2 || !is_connected(g)) return std::nullopt;
    const std::vector<int> side = bipartition(g);
    if (side.empty()) return std::nullopt;
    const int s = static_cast<int>(std::count(side.begin(), side.end(), 0));
    const int t = g.order() - s;
    if (g.size() != s * t) return std::nullopt;
    return std::pair{std::min(s, t), std::max(s, t)};
}

NosalReport check_nosal(const Graph& g, const SpectralOptions& options) {
    NosalReport report;
    report.triangle_free = is_triangle_free(g);
    report.lambda = spectral_radius(g, options).lambda;
    report.sqrt_m = std::sqrt(static_cast<double>(g.size()));
    if (!report.triangle_free) return report;
    report.satisfied = report.lambda <= report.sqrt_m + 1e-9;
    if (std::abs(report.lambda - report.sqrt_m) <= 1e-6) {
        report.equality_structure = complete_bipartite_sides(g);
        if (!report.equality_structure) report.satisfied = false;
    }
    return report;
}

IdentityResiduals eigen_identity_check(const Graph& g, const SpectralResult& res, int ustar) {
    const auto& x = res.perron;
    if (static_cast<int>(x.size()) != g.order()) throw std::invalid_argument("eigen_identity_check: size mismatch");
    const VertexSet u = g.neighbors(ustar);
    const VertexSet w = g.vertices() & ~u & ~bit(ustar);
    const double lambda = res.lambda;

    double sum_u = 0.0;
    double second = popcount(u) * x[ustar];
    for_each_vertex(u, [&](int v) {
        sum_u += x[v];
        second += degree_into(g, v, u) * x[v];  // zero on U0
    });
    for_each_vertex(w, [&](int v) { second += degree_into(g, v, u) * x[v]; });

    return {std::abs(lambda * x[ustar] - sum_u), std::abs(lambda * lambda * x[ustar] - second)};
}

}  // namespace thetafree
