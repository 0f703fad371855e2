#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "thetafree/canonical.hpp"
#include "thetafree/families.hpp"
#include "thetafree/spectral.hpp"
#include "thetafree/verify.hpp"

using namespace thetafree;

namespace {

const LemmaEntry& entry(const LemmaChecklist& list, const std::string& id) {
    for (const auto& e : list)
        if (e.id == id) return e;
    throw std::out_of_range("no entry " + id);
}

// Edge partition by brute force over the edge list.
EdgeLedger direct_ledger(const Graph& g, int ustar) {
    std::vector<int> part(g.order(), 2);  // 0 = u*, 1 = U, 2 = W
    part[ustar] = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.has_edge(ustar, v)) part[v] = 1;
    EdgeLedger l;
    l.m = g.size();
    for (auto [a, b] : g.edges()) {
        const int pa = part[a];
        const int pb = part[b];
        if (pa == 0 || pb == 0) ++l.size_u;
        else if (pa == 1 && pb == 1) ++l.e_uplus;
        else if (pa == 2 && pb == 2) ++l.e_w;
        else ++l.e_uw;
    }
    return l;
}

}  // namespace

TEST_CASE("classification of named components") {
    CHECK(classify_component(complete(2)).to_string() == "Star(1)");
    CHECK(classify_component(path(3)).to_string() == "Star(2)");
    CHECK(classify_component(star(6)).to_string() == "Star(5)");
    CHECK(classify_component(complete(3)).to_string() == "Cycle(3)");
    CHECK(classify_component(cycle(7)).to_string() == "Cycle(7)");
    CHECK(classify_component(path(4)).to_string() == "Path(4)");
    CHECK(classify_component(path(9)).to_string() == "Path(9)");
    CHECK(classify_component(complete(4)).to_string() == "K4");
    CHECK(classify_component(complete_minus_edge(4)).to_string() == "K4-e");
    CHECK(classify_component(star_plus_edge(4)).to_string() == "K1,3+e");
    CHECK(classify_component(star_plus_edge(5)).to_string() == "Other");
    CHECK(classify_component(complete(5)).to_string() == "Other");
    CHECK(classify_component(relabel(star_plus_edge(4), std::vector<int>{2, 3, 0, 1})).kind ==
          ComponentKind::star_plus_edge);
}

TEST_CASE("long cycles") {
    CHECK_FALSE(has_long_cycle(complete(3)));
    CHECK(has_long_cycle(book(5)));
    CHECK_FALSE(has_long_cycle(Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}})));
    CHECK_FALSE(has_long_cycle(star_plus_edge(4)));
    CHECK(has_long_cycle(cycle(4)));
    CHECK(has_long_cycle(complete_minus_edge(4)));
    CHECK_FALSE(has_long_cycle(disjoint_union(complete(3), complete(3))));
}

TEST_CASE("book(3) decomposition") {
    const Graph g = book(3);
    const DecompositionReport r = decompose(g, spectral_radius(g));
    CHECK(r.ustar == 0);
    CHECK(r.u == (bit(1) | bit(2) | bit(3) | bit(4)));
    CHECK(r.w == 0);
    CHECK(r.u0 == 0);
    CHECK(r.uplus == r.u);
    REQUIRE(r.components.size() == 1);
    CHECK(r.components[0].cls.to_string() == "Star(3)");
    CHECK(r.ledger.size_u == 4);
    CHECK(r.ledger.e_uplus == 3);
    CHECK(r.ledger.e_uw == 0);
    CHECK(r.ledger.e_w == 0);
    CHECK(r.ledger.balanced());
}

TEST_CASE("star and cycle decompositions") {
    const DecompositionReport s = decompose(star(7), spectral_radius(star(7)));
    CHECK(s.ustar == 0);
    CHECK(s.u0 == s.u);
    CHECK(s.uplus == 0);
    CHECK(s.ledger.size_u == 6);
    CHECK(s.ledger.balanced());

    const DecompositionReport c = decompose(cycle(6), spectral_radius(cycle(6)));
    CHECK(c.ustar == 0);
    CHECK(popcount(c.u) == 2);
    CHECK(popcount(c.w) == 3);
    CHECK(c.uplus == 0);
    CHECK(c.ledger.e_uw == direct_ledger(cycle(6), 0).e_uw);
    CHECK(c.ledger.e_w == direct_ledger(cycle(6), 0).e_w);
    CHECK(c.ledger.balanced());

    CHECK_THROWS_AS(decompose_at(Graph::from_edges(4, {{0, 1}, {2, 3}}), 0), DisconnectedGraphError);
}

TEST_CASE("partition and ledger on random graphs at every vertex") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_connected_graph(2 + static_cast<int>(trial % 19), 0.25, rng);
        for (int v = 0; v < g.order(); ++v) {
            const DecompositionReport r = decompose_at(g, v);
            REQUIRE((r.u | r.w | bit(v)) == g.vertices());
            REQUIRE((r.u & r.w) == 0);
            REQUIRE((r.u0 | r.uplus) == r.u);
            REQUIRE((r.u0 & r.uplus) == 0);
            for_each_vertex(r.uplus, [&](int x) { REQUIRE(degree_into(g, x, r.u) >= 1); });
            const EdgeLedger d = direct_ledger(g, v);
            REQUIRE(r.ledger.size_u == d.size_u);
            REQUIRE(r.ledger.e_uplus == d.e_uplus);
            REQUIRE(r.ledger.e_uw == d.e_uw);
            REQUIRE(r.ledger.e_w == d.e_w);
            REQUIRE(r.ledger.balanced());
            VertexSet covered = 0;
            for (const auto& c : r.components) covered |= c.vertices;
            REQUIRE(covered == r.uplus);
        }
    }
}

TEST_CASE("lemma checklist holds on every book") {
    for (int k = 1; k <= 50; ++k) {
        const Graph g = book(k);
        const LemmaChecklist list = check_lemma_conclusions(g, decompose(g, spectral_radius(g)));
        CHECK(list.size() == 9);
        for (const auto& e : list) CHECK_MESSAGE(e.holds, "book(", k, ") ", e.id);
    }
}

TEST_CASE("lemma checklist on a star and on non-maximisers") {
    const Graph s = star(6);
    const LemmaChecklist list = check_lemma_conclusions(s, decompose(s, spectral_radius(s)));
    CHECK(entry(list, "min_degree_outside").holds);
    CHECK(entry(list, "all_stars").holds);
    CHECK(entry(list, "long_cycle_w_degree").informational);

    // C6 around vertex 0: W spans a path, so e(W) > 0 and vertex 3 has degree 2 outside N[u*]
    const Graph c6 = cycle(6);
    const LemmaChecklist cl = check_lemma_conclusions(c6, decompose(c6, spectral_radius(c6)));
    CHECK_FALSE(entry(cl, "w_independent").holds);
    CHECK(entry(cl, "min_degree_outside").holds);

    // a pendant vertex at distance two violates the degree condition
    const Graph pendant = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    const DecompositionReport pr = decompose_at(pendant, 0);
    const LemmaChecklist pl = check_lemma_conclusions(pendant, pr);
    CHECK_FALSE(entry(pl, "min_degree_outside").holds);
    CHECK(entry(pl, "min_degree_outside").witness == std::vector<int>{3});

    // u* adjacent to every vertex of a P4 gives a Path(4) component
    const Graph fan = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    const LemmaChecklist fl = check_lemma_conclusions(fan, decompose_at(fan, 0));
    CHECK_FALSE(entry(fl, "no_long_path").holds);
    CHECK_FALSE(entry(fl, "all_stars").holds);

    CHECK_THROWS_AS(check_lemma_conclusions(complete(6), decompose_at(complete(6), 0)), std::invalid_argument);
}

TEST_CASE("inequality check") {
    const Graph b28 = book(28);
    const SpectralResult res = spectral_radius(b28);
    const InequalityCheck c = inequality_one_check(b28, decompose(b28, res), res);
    CHECK(c.applicable);
    CHECK(c.slack >= -1e-8);

    const SpectralResult p4 = spectral_radius(path(4));
    CHECK_FALSE(inequality_one_check(path(4), decompose(path(4), p4), p4).applicable);

    const SpectralResult b3 = spectral_radius(book(3));
    CHECK(inequality_one_check(book(3), decompose(book(3), b3), b3).applicable);
}

TEST_CASE("inequality terms match an independent recomputation") {
    std::mt19937_64 rng(59);
    int applicable = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = oracle::random_connected_graph(4 + static_cast<int>(trial % 12), 0.4, rng);
        const SpectralResult res = spectral_radius(g);
        const DecompositionReport rep = decompose(g, res);
        const InequalityCheck c = inequality_one_check(g, rep, res);
        const int n = g.order();
        const int us = rep.ustar;
        const auto& x = res.perron;
        std::vector<int> in_u(n, 0);
        for (int v = 0; v < n; ++v) in_u[v] = g.has_edge(us, v) ? 1 : 0;
        auto d_u = [&](int v) {
            int d = 0;
            for (int w = 0; w < n; ++w) d += in_u[w] && g.has_edge(v, w);
            return d;
        };
        double lhs = 0.0;
        double rhs = -1.0;
        for (int v = 0; v < n; ++v) {
            if (v == us) continue;
            if (in_u[v]) {
                if (d_u(v) > 0) lhs += (d_u(v) - 1) * x[v] / x[us];
                else rhs += x[v] / x[us];
            } else {
                lhs += d_u(v) * x[v] / x[us];
            }
        }
        for (auto [a, b] : g.edges())
            if (a != us && b != us) rhs += 1.0;
        CHECK(std::abs(c.lhs - lhs) <= 1e-10);
        CHECK(std::abs(c.rhs - rhs) <= 1e-10);
        CHECK(std::abs(c.slack - (res.lambda * res.lambda - res.lambda - (g.size() - 1))) <= 1e-8);
        applicable += c.applicable;
    }
    CHECK(applicable > 0);
}

TEST_CASE("book recognition") {
    for (int k = 1; k <= 30; ++k) CHECK(is_book(book(k)));
    CHECK(is_book(relabel(book(4), std::vector<int>{5, 4, 3, 2, 1, 0})));
    CHECK_FALSE(is_book(star(5)));
    CHECK_FALSE(is_book(book(4).with_edge(2, 3)));
    CHECK_FALSE(is_book(cycle(5)));
}

TEST_CASE("theorem certificates") {
    const Certificate b = verify_theorem_instance(book(28));
    CHECK(b.theta_free);
    CHECK(b.m == 57);
    CHECK(std::abs(*b.lambda - 8.0) <= 1e-9);
    CHECK(*b.bound == 8.0);
    CHECK(b.equality_claimed);
    CHECK(b.iso_to_book == std::optional<bool>(true));
    REQUIRE(b.lemmas.has_value());
    for (const auto& e : *b.lemmas) CHECK(e.holds);

    const Certificate s = verify_theorem_instance(star(58));
    CHECK(s.theta_free);
    CHECK(*s.lambda == doctest::Approx(std::sqrt(57.0)));
    CHECK_FALSE(s.equality_claimed);
    CHECK(s.iso_to_book == std::optional<bool>(false));

    const Certificate k6 = verify_theorem_instance(complete(6));
    CHECK_FALSE(k6.theta_free);
    REQUIRE(k6.witness.has_value());
    CHECK(validate_witness(complete(6), ThetaSpec(2, 2, 3), *k6.witness).empty());
    CHECK_FALSE(k6.iso_to_book.has_value());
    CHECK_FALSE(k6.decomposition.has_value());

    for (int k = 1; k <= 40; ++k) {
        const Certificate c = verify_theorem_instance(book(k));
        CHECK(c.equality_claimed);
        CHECK(c.iso_to_book == std::optional<bool>(true));
    }

    const Certificate split = verify_theorem_instance(disjoint_union(book(2), complete(2)));
    CHECK_FALSE(split.connected);
    CHECK_FALSE(split.decomposition.has_value());
    CHECK(split.lambda.has_value());

    CHECK_NOTHROW(verify_theorem_instance(Graph(0)));
    CHECK_NOTHROW(verify_theorem_instance(Graph(3)));
}
