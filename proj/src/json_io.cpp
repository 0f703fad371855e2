#include "thetafree/json_io.hpp"

#include <cmath>

#include <fmt/format.h>

namespace thetafree {

namespace {

std::string format_float(double v) {
    if (!std::isfinite(v)) return "null";
    std::string s = fmt::format("{:.17g}", v);
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

void write(const Json& j, int indent, int depth, std::string& out) {
    const bool pretty = indent >= 0;
    auto newline = [&](int level) {
        if (!pretty) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * level), ' ');
    };
    switch (j.type()) {
        case Json::value_t::number_float:
            out += format_float(j.get<double>());
            return;
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += '[';
            bool first = true;
            for (const auto& item : j) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                write(item, indent, depth + 1, out);
            }
            newline(depth);
            out += ']';
            return;
        }
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                out += Json(key).dump();
                out += pretty ? ": " : ":";
                write(value, indent, depth + 1, out);
            }
            newline(depth);
            out += '}';
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

Json vertex_list(VertexSet s) { return to_vector(s); }

}  // namespace

std::string dump_json(const Json& j, int indent) {
    std::string out;
    write(j, indent, 0, out);
    return out;
}

Json to_json(const ThetaWitness& w) {
    Json paths = Json::array();
    for (const auto& p : w.paths) paths.push_back(p);
    return {{"hubs", {w.hub_a, w.hub_b}}, {"paths", paths}};
}

ThetaWitness witness_from_json(const Json& j) {
    ThetaWitness w{};
    const auto& hubs = j.at("hubs");
    w.hub_a = hubs.at(0).get<int>();
    w.hub_b = hubs.at(1).get<int>();
    const auto& paths = j.at("paths");
    if (paths.size() != 3) throw std::invalid_argument("witness must have three paths");
    for (int i = 0; i < 3; ++i) w.paths[i] = paths.at(i).get<std::vector<int>>();
    return w;
}

Json to_json(const SpectralResult& r) {
    return {{"lambda", r.lambda}, {"residual", r.residual}, {"iterations", r.iterations}, {"perron", r.perron}};
}

Json to_json(const NosalReport& r) {
    Json j{{"triangle_free", r.triangle_free},
           {"lambda", r.lambda},
           {"sqrt_m", r.sqrt_m},
           {"satisfied", r.satisfied},
           {"equality_structure", nullptr}};
    if (r.equality_structure) j["equality_structure"] = {r.equality_structure->first, r.equality_structure->second};
    return j;
}

Json to_json(const DecompositionReport& r) {
    Json comps = Json::array();
    for (const auto& c : r.components) {
        comps.push_back({{"vertices", vertex_list(c.vertices)},
                         {"class", c.cls.to_string()},
                         {"w_neighbors", vertex_list(c.w_neighbors)}});
    }
    return {{"ustar", r.ustar},
            {"U", vertex_list(r.u)},
            {"W", vertex_list(r.w)},
            {"U0", vertex_list(r.u0)},
            {"Uplus", vertex_list(r.uplus)},
            {"components", comps},
            {"ledger",
             {{"sizeU", r.ledger.size_u},
              {"eUplus", r.ledger.e_uplus},
              {"eUW", r.ledger.e_uw},
              {"eW", r.ledger.e_w},
              {"m", r.ledger.m}}}};
}

Json to_json(const LemmaChecklist& lemmas) {
    Json out = Json::array();
    for (const auto& e : lemmas) {
        Json j{{"id", e.id}, {"description", e.description}, {"holds", e.holds}};
        if (e.informational) j["informational"] = true;
        if (!e.holds) j["witness"] = e.witness;
        out.push_back(std::move(j));
    }
    return out;
}

Json to_json(const InequalityCheck& c) {
    return {{"applicable", c.applicable}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"slack", c.slack}};
}

Json to_json(const ExtremalRecord& rec) {
    Json runners = Json::array();
    for (const auto& r : rec.runner_ups) runners.push_back({{"graph6", r.label.bytes}, {"lambda", r.lambda}});
    return {{"m", rec.m},
            {"spec", rec.spec.to_string()},
            {"connected_only", rec.connected_only},
            {"best_graph", rec.best.label.bytes},
            {"best_order", rec.best.graph.order()},
            {"best_lambda", rec.best.lambda},
            {"num_candidates", rec.num_candidates},
            {"runner_ups", runners}};
}

Json to_json(const TableRow& row) {
    return {{"m", row.m},
            {"best_lambda", row.best_lambda},
            {"bound", row.bound},
            {"gap", row.gap},
            {"best_graph6", row.best_graph6}};
}

Json to_json(const Certificate& c) {
    Json j;
    j["graph6"] = c.graph6;
    j["m"] = c.m;
    j["spec"] = c.spec.to_string();
    j["connected"] = c.connected;
    j["lambda"] = c.lambda ? Json(*c.lambda) : Json(nullptr);
    j["bound"] = c.bound ? Json(*c.bound) : Json(nullptr);
    j["theta_free"] = c.theta_free;
    if (c.witness) j["witness"] = to_json(*c.witness);
    if (c.decomposition) {
        const auto d = to_json(*c.decomposition);
        j["ustar"] = d["ustar"];
        j["ledger"] = d["ledger"];
        j["components"] = d["components"];
        j["decomposition"] = {{"U", d["U"]}, {"W", d["W"]}, {"U0", d["U0"]}, {"Uplus", d["Uplus"]}};
    } else {
        j["ustar"] = nullptr;
        j["ledger"] = nullptr;
        j["components"] = nullptr;
    }
    j["identities"] = c.identities ? Json{{"first_order", c.identities->first_order},
                                          {"second_order", c.identities->second_order}}
                                   : Json(nullptr);
    j["lemmas"] = c.lemmas ? to_json(*c.lemmas) : Json(nullptr);
    j["inequality1"] = c.inequality1 ? to_json(*c.inequality1) : Json(nullptr);
    j["equality_case"] = c.iso_to_book ? Json{{"claimed", c.equality_claimed}, {"iso_to_book", *c.iso_to_book}}
                                       : Json(nullptr);
    return j;
}

}  // namespace thetafree
