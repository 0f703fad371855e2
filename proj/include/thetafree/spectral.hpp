#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "thetafree/graph.hpp"

namespace thetafree {

class DisconnectedGraphError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SpectralOptions {
    double tolerance = 1e-12;  // relative: stop when residual <= tolerance * max(1, lambda)
    long max_iterations = 1'000'000;
};

struct SpectralResult {
    double lambda = 0.0;
    std::vector<double> perron;  // unit 2-norm, indexed by vertex
    double residual = 0.0;       // max_v |(A x)_v - lambda x_v|
    long iterations = 0;
};

/// Spectral radius and Perron vector of a connected graph by power iteration on A + I.
/// Starts from the all-ones vector; lambda is the Rayleigh quotient of A.
/// Throws DisconnectedGraphError or ConvergenceError.
SpectralResult spectral_radius(const Graph& g, const SpectralOptions& options = {});

/// Same solver on an edge list, for graphs beyond the 64-vertex Graph budget.
SpectralResult spectral_radius(int n, std::span<const std::pair<int, int>> edges, const SpectralOptions& options = {});

/// Largest adjacency eigenvalue of any graph: the maximum over its components.
double largest_eigenvalue(const Graph& g, const SpectralOptions& options = {});

/// Smallest vertex whose Perron entry is within `tie_tolerance` of the maximum.
int extremal_vertex(const SpectralResult& res, double tie_tolerance = 1e-9);

/// (1 + sqrt(4m - 3)) / 2, the spectral radius of the book with m edges. Requires m >= 1.
double bound_value(int m);

struct NosalReport {
    bool triangle_free = false;
    double lambda = 0.0;
    double sqrt_m = 0.0;
    bool satisfied = true;  // vacuous when the graph has a triangle
    std::optional<std::pair<int, int>> equality_structure;  // (s, t), s <= t, when lambda == sqrt(m)
};

/// For triangle-free g, checks lambda <= sqrt(m) + 1e-9; near equality (1e-6) confirms g is
/// complete bipartite and reports its sides. g must be connected.
NosalReport check_nosal(const Graph& g, const SpectralOptions& options = {});

/// Complete bipartite sides (s, t) with s <= t, if g is connected complete bipartite.
std::optional<std::pair<int, int>> complete_bipartite_sides(const Graph& g);

struct IdentityResiduals {
    double first_order = 0.0;   // |lambda x_u* - sum_{u in U} x_u|
    double second_order = 0.0;  // |lambda^2 x_u* - (|U| x_u* + sum_{U+} d_U x_u + sum_W d_U x_w)|
};

/// Evaluates both eigen-identities at `ustar`, with U = N(ustar) and W = V \ N[ustar].
IdentityResiduals eigen_identity_check(const Graph& g, const SpectralResult& res, int ustar);

}  // namespace thetafree
