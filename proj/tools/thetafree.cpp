#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "thetafree/enumerate.hpp"
#include "thetafree/families.hpp"
#include "thetafree/graph6.hpp"
#include "thetafree/json_io.hpp"
#include "thetafree/spectral.hpp"
#include "thetafree/theta.hpp"
#include "thetafree/verify.hpp"

using namespace thetafree;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fixed(double v) {
    if (std::abs(v) < 5e-10) v = 0.0;
    return fmt::format("{:.9f}", v);
}

// Graphs from the positional argument if given, otherwise one graph6 per stdin line.
std::vector<Graph> input_graphs(const std::optional<std::string>& arg) {
    std::vector<Graph> out;
    try {
        if (arg) {
            out.push_back(from_graph6(*arg));
        } else {
            out = read_graph6_lines(std::cin);
        }
    } catch (const Graph6Error& e) {
        throw UsageError(e.what());
    }
    if (out.empty()) throw UsageError("no graph given (pass graph6 as an argument or on stdin)");
    return out;
}

ThetaSpec parse_spec(const std::string& text) {
    try {
        return ThetaSpec::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void print_json(const Json& j) { std::cout << dump_json(j) << '\n'; }

struct Budget {
    std::optional<int> limit;

    int value() const { return limit ? *limit : edge_budget_from_env(); }
};

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("--edges expects M or A..B, got '" + text + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"theta(2,2,3)-free spectral extremal graph workbench"};
    app.require_subcommand(1);
    app.footer(fmt::format(
        "Graphs are read as graph6, from the positional argument or one per line on stdin.\n"
        "Exit codes: 0 success, 1 property does not hold, 2 usage error, 3 enumeration budget exceeded.\n"
        "Environment: {} sets the default edge budget for enumerate/search/table (default {}); --limit overrides it.",
        kEdgeBudgetEnv, kDefaultEdgeBudget));

    std::optional<std::string> graph_arg;
    std::string spec_text = "2,2,3";
    bool json = false;
    int threads = 1;
    Budget budget;

    auto* radius = app.add_subcommand("radius", "Spectral radius and residual of connected graphs");
    radius->add_option("graph6", graph_arg, "Graph in graph6 format");
    radius->add_flag("--json", json, "SpectralResult as JSON");

    auto* free = app.add_subcommand("free", "Exit 0 if theta(R,P,Q)-free, else exit 1 with a JSON witness");
    free->add_option("graph6", graph_arg, "Graph in graph6 format");
    free->add_option("--spec", spec_text, "Theta path lengths R,P,Q")->capture_default_str();

    int edges = 0;
    bool connected_only = false;
    std::optional<std::string> free_spec;
    auto* enumerate = app.add_subcommand("enumerate", "One graph6 line per isomorphism class with M edges");
    enumerate->add_option("--edges", edges, "Edge count M")->required();
    enumerate->add_flag("--connected", connected_only, "Connected graphs only");
    enumerate->add_option("--free", free_spec, "Keep only theta(R,P,Q)-free graphs");
    enumerate->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    enumerate->add_option("--limit", budget.limit, "Edge budget (overrides the environment)")->check(CLI::PositiveNumber);

    bool include_disconnected = false;
    auto* search = app.add_subcommand("search", "Maximum spectral radius over theta-free graphs with M edges");
    search->add_option("--edges", edges, "Edge count M")->required();
    search->add_option("--spec", spec_text, "Theta path lengths R,P,Q")->capture_default_str();
    search->add_flag("--json", json, "ExtremalRecord as JSON");
    search->add_flag("--disconnected", include_disconnected, "Also consider disconnected graphs");
    search->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    search->add_option("--limit", budget.limit, "Edge budget (overrides the environment)")->check(CLI::PositiveNumber);

    std::string range;
    auto* table = app.add_subcommand("table", "Best spectral radius against the closed-form bound for A..B edges");
    table->add_option("--edges", range, "Edge range A..B")->required();
    table->add_option("--spec", spec_text, "Theta path lengths R,P,Q")->capture_default_str();
    table->add_flag("--json", json, "Rows as JSON");
    table->add_flag("--disconnected", include_disconnected, "Also consider disconnected graphs");
    table->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    table->add_option("--limit", budget.limit, "Edge budget (overrides the environment)")->check(CLI::PositiveNumber);

    std::string family_text;
    std::optional<int> k_param;
    std::optional<int> n_param;
    std::optional<int> s_param;
    std::optional<int> t_param;
    auto* fam = app.add_subcommand("family", "Print a named graph as graph6");
    fam->add_option("name", family_text,
                    "book, star, star_plus_edge, complete, complete_minus_edge, complete_bipartite, path, cycle")
        ->required();
    fam->add_option("--k", k_param, "Pages of a book");
    fam->add_option("--n", n_param, "Vertex count");
    fam->add_option("--s", s_param, "First side of complete_bipartite");
    fam->add_option("--t", t_param, "Second side of complete_bipartite");

    auto* verify = app.add_subcommand("verify", "Certificate for the spectral bound on one graph");
    verify->add_option("graph6", graph_arg, "Graph in graph6 format");
    verify->add_option("--spec", spec_text, "Theta path lengths R,P,Q")->capture_default_str();
    verify->add_flag("--json", json, "Certificate as JSON");

    auto* nosal = app.add_subcommand("nosal", "Triangle-free bound lambda <= sqrt(m)");
    nosal->add_option("graph6", graph_arg, "Graph in graph6 format");
    nosal->add_flag("--json", json, "Report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*radius) {
            int status = kExitHolds;
            for (const Graph& g : input_graphs(graph_arg)) {
                if (!is_connected(g)) {
                    std::cerr << "radius: graph " << to_graph6(g) << " is disconnected\n";
                    status = kExitUsage;
                    continue;
                }
                const SpectralResult res = spectral_radius(g);
                if (json) print_json(to_json(res));
                else std::cout << fixed(res.lambda) << ' ' << fixed(res.residual) << '\n';
            }
            return status;
        }

        if (*free) {
            const ThetaSpec spec = parse_spec(spec_text);
            int status = kExitHolds;
            for (const Graph& g : input_graphs(graph_arg)) {
                const auto w = contains_theta(g, spec);
                if (w) {
                    print_json(to_json(*w));
                    status = kExitFails;
                } else {
                    std::cout << "free\n";
                }
            }
            return status;
        }

        if (*enumerate) {
            EnumerationOptions opts;
            opts.connected_only = connected_only;
            opts.threads = threads;
            opts.edge_budget = budget.value();
            std::optional<ThetaSpec> spec;
            if (free_spec) spec = parse_spec(*free_spec);
            if (spec) opts.hereditary_filter = [s = *spec](const Graph& g) { return is_theta_free(g, s); };
            for (const auto& e : enumerate_by_edges(edges, opts)) std::cout << to_graph6(e.graph) << '\n';
            return kExitHolds;
        }

        if (*search) {
            SearchOptions opts;
            opts.connected_only = !include_disconnected;
            opts.threads = threads;
            opts.edge_budget = budget.value();
            const ExtremalRecord rec = extremal_search(edges, parse_spec(spec_text), opts);
            if (json) {
                print_json(to_json(rec));
            } else {
                std::cout << "m " << rec.m << "\nspec " << rec.spec.to_string() << "\nbest_graph "
                          << to_graph6(rec.best.graph) << "\nbest_lambda " << fixed(rec.best.lambda)
                          << "\nnum_candidates " << rec.num_candidates << '\n';
                for (const auto& r : rec.runner_ups)
                    std::cout << "runner_up " << to_graph6(r.graph) << ' ' << fixed(r.lambda) << '\n';
            }
            return kExitHolds;
        }

        if (*table) {
            const auto [lo, hi] = parse_range(range);
            if (lo < 1 || hi < lo) throw UsageError("--edges range must satisfy 1 <= A <= B");
            std::vector<int> ms;
            for (int m = lo; m <= hi; ++m) ms.push_back(m);
            SearchOptions opts;
            opts.connected_only = !include_disconnected;
            opts.threads = threads;
            opts.edge_budget = budget.value();
            const auto rows = extremal_table(ms, parse_spec(spec_text), opts);
            if (json) {
                Json arr = Json::array();
                for (const auto& r : rows) arr.push_back(to_json(r));
                print_json(arr);
            } else {
                std::cout << "m\tbest_lambda\tbound\tgap\tbest_graph6\n";
                for (const auto& r : rows)
                    std::cout << r.m << '\t' << fixed(r.best_lambda) << '\t' << fixed(r.bound) << '\t' << fixed(r.gap)
                              << '\t' << r.best_graph6 << '\n';
            }
            return kExitHolds;
        }

        if (*fam) {
            Graph g(0);
            try {
                if (family_text == "book") {
                    if (!k_param) throw UsageError("family book needs --k");
                    g = book(*k_param);
                } else {
                    const Family f = parse_family(family_text);
                    std::vector<int> params;
                    if (f == Family::complete_bipartite) {
                        if (!s_param || !t_param) throw UsageError("complete_bipartite needs --s and --t");
                        params = {*s_param, *t_param};
                    } else {
                        if (!n_param) throw UsageError("family " + family_text + " needs --n");
                        params = {*n_param};
                    }
                    g = family(f, params);
                }
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            std::cout << to_graph6(g) << '\n';
            return kExitHolds;
        }

        if (*verify) {
            const ThetaSpec spec = parse_spec(spec_text);
            int status = kExitHolds;
            for (const Graph& g : input_graphs(graph_arg)) {
                const Certificate c = verify_theorem_instance(g, spec);
                // the bound fails on a free graph, or equality is reached by a non-book
                const bool in_range = c.spec == ThetaSpec(2, 2, 3) && c.m >= kTheoremMinEdges;
                const bool violated = in_range && c.theta_free && c.lambda && c.bound &&
                                      (*c.lambda > *c.bound + 1e-9 || (c.equality_claimed && c.iso_to_book == false));
                if (violated) status = kExitFails;
                if (json) {
                    print_json(to_json(c));
                    continue;
                }
                std::cout << "graph6 " << c.graph6 << "\nm " << c.m << "\nspec " << c.spec.to_string() << "\ntheta_free "
                          << (c.theta_free ? "yes" : "no") << '\n';
                if (c.lambda) std::cout << "lambda " << fixed(*c.lambda) << '\n';
                if (c.bound) std::cout << "bound " << fixed(*c.bound) << '\n';
                if (c.iso_to_book) {
                    std::cout << "equality " << (c.equality_claimed ? "yes" : "no") << "\niso_to_book "
                              << (*c.iso_to_book ? "yes" : "no") << '\n';
                }
                if (c.lemmas) {
                    for (const auto& e : *c.lemmas)
                        std::cout << "lemma " << e.id << ' ' << (e.holds ? "holds" : "fails")
                                  << (e.informational ? " (informational)" : "") << '\n';
                }
                if (c.inequality1) {
                    std::cout << "inequality1 " << (c.inequality1->applicable ? "applicable" : "not-applicable")
                              << " slack " << fixed(c.inequality1->slack) << '\n';
                }
                std::cout << "verdict " << (!in_range ? "outside-theorem-range" : violated ? "VIOLATED" : "consistent")
                          << '\n';
            }
            return status;
        }

        if (*nosal) {
            int status = kExitHolds;
            for (const Graph& g : input_graphs(graph_arg)) {
                if (!is_connected(g)) throw UsageError("nosal: graph " + to_graph6(g) + " is disconnected");
                const NosalReport r = check_nosal(g);
                if (!r.satisfied) status = kExitFails;
                if (json) {
                    print_json(to_json(r));
                    continue;
                }
                std::cout << "triangle_free " << (r.triangle_free ? "yes" : "no") << " lambda " << fixed(r.lambda)
                          << " sqrt_m " << fixed(r.sqrt_m) << " satisfied " << (r.satisfied ? "yes" : "no");
                if (r.equality_structure)
                    std::cout << " equality K" << r.equality_structure->first << ',' << r.equality_structure->second;
                std::cout << '\n';
            }
            return status;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise it with --limit or " << kEdgeBudgetEnv << ")\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
    return kExitUsage;
}
