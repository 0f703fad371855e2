#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "thetafree/canonical.hpp"
#include "thetafree/graph.hpp"
#include "thetafree/theta.hpp"

namespace thetafree {

/// Raised when a request exceeds the enumeration budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultEdgeBudget = 12;
inline constexpr int kMaxCountedOrder = 7;

/// Name of the environment variable that raises or lowers the edge budget.
inline constexpr const char* kEdgeBudgetEnv = "THETAFREE_EDGE_BUDGET";

/// kDefaultEdgeBudget unless THETAFREE_EDGE_BUDGET holds a positive integer.
int edge_budget_from_env();

struct EnumeratedGraph {
    Graph graph;  // canonical form
    CanonicalLabel label;
};

struct EnumerationOptions {
    bool connected_only = false;
    int threads = 1;
    int edge_budget = kDefaultEdgeBudget;
    /// Optional filter that must be closed under taking subgraphs (e.g. theta-freeness).
    /// Rejected graphs are neither yielded nor augmented further.
    std::function<bool(const Graph&)> hereditary_filter;
};

/// One canonical representative per isomorphism class of graphs with m edges and no isolated
/// vertices, sorted by canonical label. Output is identical for every thread count.
///
/// Generation augments by one edge at a time; a child is kept only if deleting its canonical
/// edge (and any vertex left isolated) gives back the parent's class.
std::vector<EnumeratedGraph> enumerate_by_edges(int m, const EnumerationOptions& options = {});

/// One canonical representative per isomorphism class of graphs on exactly n vertices
/// (isolated vertices allowed), built by vertex augmentation with canonical deletion.
std::vector<EnumeratedGraph> enumerate_by_order(int n);

/// Number of connected isomorphism classes on n vertices, 1 <= n <= 7.
long count_connected_by_order(int n);

struct RankedGraph {
    Graph graph;
    CanonicalLabel label;
    double lambda = 0.0;
};

struct SearchOptions {
    bool connected_only = true;
    int threads = 1;
    int edge_budget = kDefaultEdgeBudget;
    int runner_ups = 5;
};

struct ExtremalRecord {
    int m = 0;
    ThetaSpec spec{2, 2, 3};
    bool connected_only = true;
    RankedGraph best;
    long num_candidates = 0;  // spec-free classes whose spectral radius was computed
    std::vector<RankedGraph> runner_ups;
};

/// Maximum spectral radius over spec-free graphs with m edges and no isolated vertices.
/// Ties within 1e-9 go to the smaller order, then the smaller canonical label.
ExtremalRecord extremal_search(int m, const ThetaSpec& spec, const SearchOptions& options = {});

struct TableRow {
    int m = 0;
    double best_lambda = 0.0;
    double bound = 0.0;
    double gap = 0.0;  // bound - best_lambda
    std::string best_graph6;
};

std::vector<TableRow> extremal_table(std::span<const int> edge_counts, const ThetaSpec& spec,
                                     const SearchOptions& options = {});

/// Runs fn(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace thetafree
