#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spectough/distance.hpp"
#include "spectough/errors.hpp"
#include "spectough/graph.hpp"
#include "spectough/quotient.hpp"
#include "spectough/sampling.hpp"
#include "spectough/spectral.hpp"

using namespace spectough;

namespace {

Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

// K_2 v (K_12 + 2 K_1): join clique 0..1, large clique 2..13, isolated 14..15
Graph gstar16() {
    Graph inner = disjoint_union(disjoint_union(Graph::complete(12), Graph::complete(1)),
                                 Graph::complete(1));
    return join(Graph::complete(2), inner);
}

}  // namespace

TEST_CASE("distance matrix of a path") {
    DistanceMatrix d = distance_matrix(path(3));
    int expected[3][3] = {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) CHECK(d.at(i, j) == expected[i][j]);
    }
}

TEST_CASE("distance matrix of complete graphs is all ones off-diagonal") {
    DistanceMatrix d = distance_matrix(Graph::complete(6));
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) CHECK(d.at(i, j) == (i == j ? 0 : 1));
    }
}

TEST_CASE("distance matrix of the extremal split graph has the block pattern") {
    DistanceMatrix d = distance_matrix(gstar16());
    for (int i = 0; i < 16; ++i) {
        for (int j = 0; j < 16; ++j) {
            if (i == j) {
                CHECK(d.at(i, j) == 0);
                continue;
            }
            bool i_join = i < 2, j_join = j < 2;
            bool i_big = i >= 2 && i < 14, j_big = j >= 2 && j < 14;
            int expected;
            if (i_join || j_join) {
                expected = 1;  // the join clique sees everything
            } else if (i_big && j_big) {
                expected = 1;
            } else {
                expected = 2;  // isolated-part vertices reach the rest through the join
            }
            CHECK(d.at(i, j) == expected);
        }
    }
}

TEST_CASE("disconnected graphs are rejected with a named pair") {
    Graph g = disjoint_union(Graph::complete(2), Graph::complete(3));
    CHECK_THROWS_AS(distance_matrix(g), NotConnectedError);
    try {
        distance_matrix(g);
    } catch (const NotConnectedError& e) {
        CHECK(e.u() != e.v());
        CHECK(std::string(e.what()).find("not connected") != std::string::npos);
    }
    CHECK_THROWS_AS(wiener_indices(g), NotConnectedError);
}

TEST_CASE("spectral radius of complete graphs is n-1 with a constant Perron vector") {
    for (int n : {2, 3, 7, 20, 50}) {
        SpectralResult r = spectral_radius(distance_matrix(Graph::complete(n)));
        CHECK(std::fabs(r.lambda1 - (n - 1)) < 1e-10);
        double expected = 1.0 / std::sqrt(static_cast<double>(n));
        for (double x : r.perron) CHECK(std::fabs(x - expected) < 1e-9);
        CHECK(r.residual <= 1e-10);
        CHECK(r.method == "power");
    }
}

TEST_CASE("spectral radius of the 3-path is 1+sqrt(3)") {
    // largest root of x^3 - 6x - 4
    SpectralResult r = spectral_radius(distance_matrix(path(3)));
    CHECK(r.lambda1 == doctest::Approx(1.0 + std::sqrt(3.0)).epsilon(1e-12));
    double p = r.lambda1 * r.lambda1 * r.lambda1 - 6.0 * r.lambda1 - 4.0;
    CHECK(std::fabs(p) < 1e-8);
}

TEST_CASE("spectral radius of the 16-cycle is its constant row sum") {
    SpectralResult r = spectral_radius(distance_matrix(cycle(16)));
    CHECK(r.lambda1 == doctest::Approx(64.0).epsilon(1e-12));
}

TEST_CASE("residual contract holds on random graphs") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(rng.next() % 9);
        Graph g = sample_connected({n, 1, rng.next(), 1}).front();
        DistanceMatrix d = distance_matrix(g);
        SpectralResult r = spectral_radius(d, 1e-10);
        CHECK(r.residual <= 1e-10);
        double norm = 0.0;
        for (double x : r.perron) {
            CHECK(x > 0.0);
            norm += x * x;
        }
        CHECK(std::fabs(std::sqrt(norm) - 1.0) < 1e-12);
        // verify the residual claim independently
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            double yi = 0.0;
            for (int j = 0; j < n; ++j) yi += d.at(i, j) * r.perron[j];
            worst = std::max(worst, std::fabs(yi - r.lambda1 * r.perron[i]));
        }
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("jacobi fallback path reports itself and agrees with power iteration") {
    DistanceMatrix d = distance_matrix(gstar16());
    SpectralResult power = spectral_radius(d);
    SpectralResult jac = spectral_radius(d, 1e-10, 0);  // force the fallback
    CHECK(jac.method == "jacobi");
    CHECK(power.method == "power");
    CHECK(jac.lambda1 == doctest::Approx(power.lambda1).epsilon(1e-10));
    CHECK(jac.residual <= 1e-10);
    for (double x : jac.perron) CHECK(x > 0.0);
}

TEST_CASE("spectral radius argument validation") {
    DistanceMatrix d = distance_matrix(Graph::complete(3));
    CHECK_THROWS_AS(spectral_radius(d, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(spectral_radius(d, -1e-3), std::invalid_argument);
    CHECK_THROWS_AS(DistanceMatrix::from_entries(2, {0, 1, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(DistanceMatrix::from_entries(2, {0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(DistanceMatrix::from_entries(2, {1, 1, 1, 0}), std::invalid_argument);
}

TEST_CASE("wiener indices") {
    auto [w_k5, w2_k5] = wiener_indices(Graph::complete(5));
    CHECK(w_k5 == 10);
    CHECK(w2_k5 == 10);

    auto [w_star, w2_star] = wiener_indices(gstar16());
    CHECK(w_star == 145);  // (1/2)n^2 + (delta-1/2)n - (3/2)delta^2 - delta/2 at n=16, delta=2
    CHECK(w2_star == 195);

    Graph star14 = join(Graph::complete(1),
                        disjoint_union(Graph::complete(12), Graph::complete(1)));
    auto [w14, w2_14] = wiener_indices(star14);
    CHECK(w14 == 103);
    CHECK(w2_14 == 127);  // (1/2)n^2 + (5/2)n - 6t at n=14, t=1

    auto [w_p3, w2_p3] = wiener_indices(path(3));
    CHECK(w_p3 == 4);
    CHECK(w2_p3 == 6);
}

TEST_CASE("distance bounds") {
    // complete graphs attain both bounds
    for (int n : {2, 5, 7}) {
        auto [lo, hi] = distance_bounds(Graph::complete(n));
        CHECK(lo == doctest::Approx(n - 1.0).epsilon(1e-14));
        CHECK(hi == doctest::Approx(n - 1.0).epsilon(1e-14));
    }
    auto [lo, hi] = distance_bounds(gstar16());
    CHECK(lo == doctest::Approx(290.0 / 16.0).epsilon(1e-14));
    double lam = spectral_radius(distance_matrix(gstar16())).lambda1;
    CHECK(lo <= lam);
    CHECK(lam <= hi);

    auto [lo3, hi3] = distance_bounds(path(3));
    CHECK(lo3 == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
    CHECK(lo3 <= 1.0 + std::sqrt(3.0));
    CHECK(1.0 + std::sqrt(3.0) <= hi3);

    CHECK_THROWS_AS(distance_bounds(Graph::complete(1)), std::invalid_argument);
}

TEST_CASE("bounds bracket lambda1 on random graphs, equality only when complete") {
    SplitMix64 rng(512);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 4 + static_cast<int>(rng.next() % 7);
        Graph g = sample_connected({n, 1, rng.next(), 1}).front();
        auto [lo, hi] = distance_bounds(g);
        double lam = spectral_radius(distance_matrix(g)).lambda1;
        CHECK(lo <= lam + 1e-9);
        CHECK(lam <= hi + 1e-9);
        if (!is_complete(g)) CHECK(hi - lam > 1e-9);
    }
}

TEST_CASE("quotient matrix of the extremal family") {
    DistanceMatrix d = distance_matrix(gstar16());
    // canonical block order: isolated pair, large clique, join clique
    std::vector<VertexSet> blocks{VertexSet::of(16, {14, 15}), VertexSet(16), VertexSet::of(16, {0, 1})};
    for (int v = 2; v < 14; ++v) blocks[1].insert(v);
    QuotientMatrix q = quotient_matrix(d, blocks);
    CHECK(q.equitable);
    CHECK(q.block_sizes == std::vector<int>{2, 12, 2});
    long long expected[9] = {2, 24, 2, 4, 11, 2, 2, 12, 1};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            CHECK(q.at(i, j) == Rational(expected[i * 3 + j]));
        }
    }
    // the equitable quotient shares the full spectral radius
    double full = spectral_radius(d).lambda1;
    CHECK(q.spectral_radius() == doctest::Approx(full).epsilon(1e-10));
    CHECK(full == doctest::Approx(18.806038060669724).epsilon(1e-9));
}

TEST_CASE("single-block quotient is the average row sum") {
    DistanceMatrix d = distance_matrix(path(3));
    QuotientMatrix q = quotient_matrix(d, {VertexSet::full(3)});
    CHECK(q.m == 1);
    CHECK(q.at(0, 0) == Rational(8, 3));  // 2W/n
    CHECK_FALSE(q.equitable);             // row sums 3,2,3 differ

    DistanceMatrix dk = distance_matrix(Graph::complete(4));
    CHECK(quotient_matrix(dk, {VertexSet::full(4)}).equitable);
}

TEST_CASE("inequitable partition is flagged exactly") {
    DistanceMatrix d = distance_matrix(path(3));
    QuotientMatrix q = quotient_matrix(d, {VertexSet::of(3, {0}), VertexSet::of(3, {1, 2})});
    CHECK_FALSE(q.equitable);  // the {1,2} -> {0} block has row sums 1 and 2
}

TEST_CASE("quotient partition validation") {
    DistanceMatrix d = distance_matrix(Graph::complete(4));
    CHECK_THROWS_AS(quotient_matrix(d, {}), std::invalid_argument);
    CHECK_THROWS_AS(quotient_matrix(d, {VertexSet::of(4, {0, 1})}), std::invalid_argument);
    CHECK_THROWS_AS(
        quotient_matrix(d, {VertexSet::of(4, {0, 1}), VertexSet::of(4, {1, 2, 3})}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        quotient_matrix(d, {VertexSet::of(4, {0, 1, 2, 3}), VertexSet(4)}),
        std::invalid_argument);
}

TEST_CASE("charpoly3") {
    DistanceMatrix d = distance_matrix(gstar16());
    std::vector<VertexSet> blocks{VertexSet::of(16, {14, 15}), VertexSet(16), VertexSet::of(16, {0, 1})};
    for (int v = 2; v < 14; ++v) blocks[1].insert(v);
    QuotientMatrix q = quotient_matrix(d, blocks);
    auto cp = charpoly3(q);
    CHECK(cp[0] == Rational(1));
    CHECK(cp[1] == Rational(-14));
    CHECK(cp[2] == Rational(-89));
    CHECK(cp[3] == Rational(-26));
    // the polynomial vanishes at the dominant eigenvalue
    CHECK(std::fabs(eval_cubic(cp, q.spectral_radius())) < 1e-6);

    QuotientMatrix identity{3, {Rational(1), Rational(0), Rational(0),
                                Rational(0), Rational(1), Rational(0),
                                Rational(0), Rational(0), Rational(1)},
                            {1, 1, 1}, true};
    auto cpi = charpoly3(identity);
    CHECK(cpi == std::array<Rational, 4>{Rational(1), Rational(-3), Rational(3), Rational(-1)});

    QuotientMatrix zero{3, std::vector<Rational>(9, Rational(0)), {1, 1, 1}, true};
    auto cpz = charpoly3(zero);
    CHECK(cpz == std::array<Rational, 4>{Rational(1), Rational(0), Rational(0), Rational(0)});

    QuotientMatrix two{2, std::vector<Rational>(4, Rational(1)), {1, 1}, true};
    CHECK_THROWS_AS(charpoly3(two), std::invalid_argument);
}

TEST_CASE("edge deletion strictly raises the spectral radius") {
    Graph k4 = Graph::complete(4);
    double base = spectral_radius(distance_matrix(k4)).lambda1;
    CHECK(base == doctest::Approx(3.0));
    for (auto [u, v] : k4.edges()) {
        Graph h = remove_edge(k4, u, v);
        REQUIRE(is_connected(h));
        double lam = spectral_radius(distance_matrix(h)).lambda1;
        CHECK(lam > base + 1e-9);
    }
}
