#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "thetafree/enumerate.hpp"
#include "thetafree/families.hpp"
#include "thetafree/spectral.hpp"

using namespace thetafree;

TEST_CASE("spectral radius of small named graphs") {
    CHECK(spectral_radius(complete(2)).lambda == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spectral_radius(star(5)).lambda == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(spectral_radius(book(3)).lambda == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(std::abs(spectral_radius(book(28)).lambda - 8.0) <= 1e-9);
    CHECK(spectral_radius(complete_minus_edge(4)).lambda == doctest::Approx(2.5615528128088307).epsilon(1e-12));
    CHECK(spectral_radius(path(4)).lambda == doctest::Approx(1.6180339887498951).epsilon(1e-12));
    const SpectralResult k1 = spectral_radius(Graph(1));
    CHECK(k1.lambda == 0.0);
    CHECK(k1.perron == std::vector<double>{1.0});
}

TEST_CASE("result invariants") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_connected_graph(2 + static_cast<int>(trial % 30), 0.2, rng);
        const SpectralResult res = spectral_radius(g);
        double norm = 0.0;
        for (double x : res.perron) {
            REQUIRE(x > 0.0);
            norm += x * x;
        }
        CHECK(std::abs(norm - 1.0) <= 1e-12);
        CHECK(res.residual <= 1e-12 * std::max(1.0, res.lambda));
        double worst = 0.0;
        for (int v = 0; v < g.order(); ++v) {
            double s = 0.0;
            for (int w : to_vector(g.neighbors(v))) s += res.perron[w];
            worst = std::max(worst, std::abs(s - res.lambda * res.perron[v]));
        }
        CHECK(worst <= 1e-11 * std::max(1.0, res.lambda));
        CHECK(std::abs(res.lambda - oracle::dense_spectral_radius(g)) <= 1e-9);
    }
}

TEST_CASE("bipartite graphs converge thanks to the shift") {
    CHECK(spectral_radius(complete_bipartite(3, 12)).lambda == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(spectral_radius(cycle(10)).lambda == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(spectral_radius(path(30)).lambda == doctest::Approx(oracle::dense_spectral_radius(path(30))).epsilon(1e-10));
}

TEST_CASE("edge-list solver matches the graph solver and handles large books") {
    const auto e = book(20).edges();
    CHECK(spectral_radius(22, e).lambda == doctest::Approx(spectral_radius(book(20)).lambda).epsilon(1e-14));
    for (int k : {63, 100, 200}) {
        const auto edges = book_edges(k);
        CHECK(std::abs(spectral_radius(k + 2, edges).lambda - bound_value(2 * k + 1)) <= 1e-9);
    }
    const std::vector<std::pair<int, int>> split{{0, 1}, {2, 3}};
    CHECK_THROWS_AS(spectral_radius(4, split), DisconnectedGraphError);
    const std::vector<std::pair<int, int>> twice{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(spectral_radius(2, twice), std::invalid_argument);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(spectral_radius(Graph::from_edges(4, {{0, 1}, {2, 3}})), DisconnectedGraphError);
    CHECK_THROWS_AS(spectral_radius(Graph(0)), std::invalid_argument);
    SpectralOptions tight;
    tight.max_iterations = 2;
    CHECK_THROWS_AS(spectral_radius(path(20), tight), ConvergenceError);
    CHECK_THROWS_AS(bound_value(0), std::invalid_argument);
}

TEST_CASE("largest eigenvalue of disconnected graphs") {
    const Graph g = disjoint_union(complete(4), path(3));
    CHECK(largest_eigenvalue(g) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(largest_eigenvalue(Graph(3)) == 0.0);
}

TEST_CASE("extremal vertex") {
    CHECK(extremal_vertex(spectral_radius(star(6))) == 0);
    CHECK(extremal_vertex(spectral_radius(book(3))) == 0);
    CHECK(extremal_vertex(spectral_radius(cycle(6))) == 0);
    const Graph relabelled = relabel(star(6), std::vector<int>{3, 1, 2, 0, 4, 5});
    CHECK(extremal_vertex(spectral_radius(relabelled)) == 3);
}

TEST_CASE("bound values") {
    CHECK(bound_value(57) == 8.0);
    CHECK(bound_value(3) == 2.0);
    CHECK(bound_value(7) == 3.0);
    CHECK(bound_value(4) == doctest::Approx((1.0 + std::sqrt(13.0)) / 2.0));
    for (int k = 1; k <= 62; ++k) CHECK(std::abs(spectral_radius(book(k)).lambda - bound_value(2 * k + 1)) <= 1e-9);
}

TEST_CASE("triangle-free edge bound") {
    const NosalReport k24 = check_nosal(complete_bipartite(2, 4));
    CHECK(k24.triangle_free);
    CHECK(k24.satisfied);
    REQUIRE(k24.equality_structure.has_value());
    CHECK(*k24.equality_structure == std::pair{2, 4});

    const NosalReport c5 = check_nosal(cycle(5));
    CHECK(c5.satisfied);
    CHECK_FALSE(c5.equality_structure.has_value());
    CHECK(c5.lambda < c5.sqrt_m - 1e-3);

    const NosalReport p4 = check_nosal(path(4));
    CHECK(p4.lambda == doctest::Approx(1.6180339887498951));
    CHECK_FALSE(p4.equality_structure.has_value());

    const NosalReport k4 = check_nosal(complete(4));
    CHECK_FALSE(k4.triangle_free);
    CHECK(k4.satisfied);

    CHECK(complete_bipartite_sides(star(4)) == std::pair{1, 3});
    CHECK_FALSE(complete_bipartite_sides(path(4)).has_value());
}

TEST_CASE("eigen identities on named graphs") {
    const SpectralResult b3 = spectral_radius(book(3));
    const IdentityResiduals r = eigen_identity_check(book(3), b3, 0);
    CHECK(r.first_order <= 1e-10);
    CHECK(r.second_order <= 1e-10);
    const IdentityResiduals s = eigen_identity_check(star(7), spectral_radius(star(7)), 0);
    CHECK(s.first_order <= 1e-10);
    CHECK(s.second_order <= 1e-10);
}

TEST_CASE("eigen identities at every vertex of random graphs") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_connected_graph(10, 0.3, rng);
        const SpectralResult res = spectral_radius(g);
        for (int v = 0; v < g.order(); ++v) {
            const IdentityResiduals r = eigen_identity_check(g, res, v);
            REQUIRE(r.first_order <= 1e-8);
            REQUIRE(r.second_order <= 1e-8);
        }
    }
}

TEST_CASE("adding an edge strictly increases the spectral radius") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& e : enumerate_by_order(n)) {
            if (!is_connected(e.graph)) continue;
            const double base = spectral_radius(e.graph).lambda;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!e.graph.has_edge(u, v)) REQUIRE(spectral_radius(e.graph.with_edge(u, v)).lambda > base + 1e-10);
        }
    }
}
