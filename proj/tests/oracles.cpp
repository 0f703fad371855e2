#include "oracles.hpp"

#include <algorithm>
#include <numeric>

#include <Eigen/Dense>

namespace thetafree::oracle {

std::string reference_graph6(const Graph& g) {
    const int n = g.order();
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
    while (bits.size() % 6 != 0) bits.push_back(0);

    std::string out;
    if (n <= 62) {
        out += static_cast<char>(63 + n);
    } else {
        out += '~';
        out += static_cast<char>(63 + ((n >> 12) & 63));
        out += static_cast<char>(63 + ((n >> 6) & 63));
        out += static_cast<char>(63 + (n & 63));
    }
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = v * 2 + bits[k + b];
        out += static_cast<char>(63 + v);
    }
    return out;
}

std::string brute_force_canonical(const Graph& g) {
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
        std::string s = reference_graph6(Graph::from_edges(n, edges));
        if (best.empty() || s < best) best = std::move(s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

double dense_spectral_radius(const Graph& g) {
    const int n = g.order();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& fn) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if ((mask >> k) & 1U) edges.push_back(pairs[k]);
        fn(Graph::from_edges(n, edges));
    }
}

void for_each_labelled_graph_with_edges(int n, int m, const std::function<void(const Graph&)>& fn) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    if (m > static_cast<int>(pairs.size())) return;
    std::vector<int> pick(m);
    std::iota(pick.begin(), pick.end(), 0);
    const int total = static_cast<int>(pairs.size());
    while (true) {
        std::vector<std::pair<int, int>> edges;
        for (int k : pick) edges.push_back(pairs[k]);
        fn(Graph::from_edges(n, edges));
        int i = m - 1;
        while (i >= 0 && pick[i] == total - m + i) --i;
        if (i < 0) return;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
}

namespace {

std::vector<std::vector<int>> connected_parts(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> parts;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> members{s};
        comp[s] = static_cast<int>(parts.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (int w = 0; w < n; ++w)
                if (comp[w] < 0 && g.has_edge(members[i], w)) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        parts.push_back(std::move(members));
    }
    return parts;
}

}  // namespace

std::string component_key(const Graph& g) {
    std::vector<std::string> keys;
    for (const auto& members : connected_parts(g)) {
        const int k = static_cast<int>(members.size());
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (g.has_edge(members[i], members[j])) edges.emplace_back(i, j);
        keys.push_back(brute_force_canonical(Graph::from_edges(k, edges)));
    }
    std::sort(keys.begin(), keys.end());
    std::string out;
    for (const auto& k : keys) out += (out.empty() ? "" : "|") + k;
    return out;
}

std::set<std::string> classes_with_edges(int m, bool connected_only) {
    std::set<std::string> out;
    for (int n = 2; n <= 2 * m; ++n) {
        for_each_labelled_graph_with_edges(n, m, [&](const Graph& g) {
            for (int v = 0; v < n; ++v)
                if (g.degree(v) == 0) return;
            if (connected_only && connected_parts(g).size() != 1) return;
            out.insert(component_key(g));
        });
    }
    return out;
}

long connected_classes_by_order(int n) {
    std::set<std::string> classes;
    for_each_labelled_graph(n, [&](const Graph& g) {
        if (connected_parts(g).size() == 1) classes.insert(brute_force_canonical(g));
    });
    return static_cast<long>(classes.size());
}

Graph random_relabel(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.order(), edges);
}

Graph random_connected_graph(int n, double density, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.emplace_back(parent(rng), v);
    }
    std::bernoulli_distribution coin(density);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (coin(rng)) edges.emplace_back(i, j);
    return random_relabel(Graph::from_edges(n, edges), rng);
}

}  // namespace thetafree::oracle
