#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thetafree/canonical.hpp"
#include "thetafree/enumerate.hpp"
#include "thetafree/families.hpp"
#include "thetafree/graph6.hpp"
#include "thetafree/json_io.hpp"
#include "thetafree/spectral.hpp"
#include "thetafree/theta.hpp"
#include "thetafree/verify.hpp"

namespace py = pybind11;
using namespace thetafree;

namespace {

std::vector<std::pair<int, int>> as_edges(const Graph& g) { return g.edges(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "theta(2,2,3)-free spectral extremal graph workbench";

    static py::exception<BudgetExceeded> budget_error(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const BudgetExceeded& e) {
            budget_error(e.what());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def_static("from_edges",
                    [](int n, const std::vector<std::pair<int, int>>& edges) { return Graph::from_edges(n, edges); },
                    py::arg("n"), py::arg("edges"))
        .def_static("from_graph6", [](const std::string& s) { return from_graph6(s); })
        .def("to_graph6", [](const Graph& g) { return to_graph6(g); })
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, int v) { return to_vector(g.neighbors(v)); })
        .def("has_edge", &Graph::has_edge)
        .def("edges", &as_edges)
        .def("with_edge", &Graph::with_edge)
        .def("is_connected", [](const Graph& g) { return is_connected(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(order=" + std::to_string(g.order()) + ", size=" + std::to_string(g.size()) + ", graph6='" +
                   to_graph6(g) + "')";
        });

    m.def("book", &book, py::arg("k"));
    m.def(
        "family",
        [](const std::string& name, const std::vector<int>& params) { return family(parse_family(name), params); },
        py::arg("name"), py::arg("params"));
    m.def("canonical_label", [](const Graph& g) { return canonical_label(g).bytes; });

    m.def(
        "contains_theta_json",
        [](const Graph& g, const std::string& spec) -> std::optional<std::string> {
            const auto w = contains_theta(g, ThetaSpec::parse(spec));
            if (!w) return std::nullopt;
            return dump_json(to_json(*w));
        },
        py::arg("g"), py::arg("spec") = "2,2,3");
    m.def(
        "is_theta_free", [](const Graph& g, const std::string& spec) { return is_theta_free(g, ThetaSpec::parse(spec)); },
        py::arg("g"), py::arg("spec") = "2,2,3");
    m.def("normalize_spec", [](const std::string& spec) { return ThetaSpec::parse(spec).to_string(); });

    m.def("spectral_radius_json", [](const Graph& g) { return dump_json(to_json(spectral_radius(g))); });
    m.def("spectral_radius", [](const Graph& g) { return spectral_radius(g).lambda; });
    m.def("bound_value", &bound_value, py::arg("m"));
    m.def("nosal_json", [](const Graph& g) { return dump_json(to_json(check_nosal(g))); });

    m.def(
        "enumerate_by_edges",
        [](int edges, bool connected_only, std::optional<std::string> free_spec, int threads, int edge_budget) {
            EnumerationOptions opts;
            opts.connected_only = connected_only;
            opts.threads = threads;
            opts.edge_budget = edge_budget > 0 ? edge_budget : edge_budget_from_env();
            if (free_spec) {
                const ThetaSpec spec = ThetaSpec::parse(*free_spec);
                opts.hereditary_filter = [spec](const Graph& g) { return is_theta_free(g, spec); };
            }
            std::vector<Graph> out;
            {
                py::gil_scoped_release release;
                for (auto& e : enumerate_by_edges(edges, opts)) out.push_back(std::move(e.graph));
            }
            return out;
        },
        py::arg("m"), py::arg("connected_only") = false, py::arg("free_spec") = std::nullopt, py::arg("threads") = 1,
        py::arg("edge_budget") = 0);
    m.def("count_connected_by_order", &count_connected_by_order, py::arg("n"));

    m.def(
        "extremal_search_json",
        [](int edges, const std::string& spec, bool connected_only, int threads, int edge_budget) {
            SearchOptions opts;
            opts.connected_only = connected_only;
            opts.threads = threads;
            opts.edge_budget = edge_budget > 0 ? edge_budget : edge_budget_from_env();
            py::gil_scoped_release release;
            return dump_json(to_json(extremal_search(edges, ThetaSpec::parse(spec), opts)));
        },
        py::arg("m"), py::arg("spec") = "2,2,3", py::arg("connected_only") = true, py::arg("threads") = 1,
        py::arg("edge_budget") = 0);

    m.def(
        "verify_json",
        [](const Graph& g, const std::string& spec) {
            return dump_json(to_json(verify_theorem_instance(g, ThetaSpec::parse(spec))));
        },
        py::arg("g"), py::arg("spec") = "2,2,3");

    m.attr("EDGE_BUDGET_ENV") = kEdgeBudgetEnv;
    m.attr("DEFAULT_EDGE_BUDGET") = kDefaultEdgeBudget;
}
