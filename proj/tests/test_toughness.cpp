#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>

#include "spectough/errors.hpp"
#include "spectough/graph.hpp"
#include "spectough/sampling.hpp"
#include "spectough/toughness.hpp"

using namespace spectough;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph split_graph(int s, const std::vector<int>& parts) {
    Graph inner = Graph::complete(parts[0]);
    for (size_t i = 1; i < parts.size(); ++i) {
        inner = disjoint_union(inner, Graph::complete(parts[i]));
    }
    return join(Graph::complete(s), inner);
}

Graph complete_bipartite(int p, int q) {
    GraphBuilder b(p + q);
    for (int u = 0; u < p; ++u) {
        for (int v = p; v < p + q; ++v) b.add_edge(u, v);
    }
    return b.finish();
}

Graph from_mask(int n, std::uint64_t mask) {
    GraphBuilder b(n);
    int bit = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
            if ((mask >> bit) & 1) b.add_edge(i, j);
        }
    }
    return b.finish();
}

}  // namespace

TEST_CASE("the 16-vertex extremal graph has toughness 2/3") {
    Graph g = split_graph(2, {12, 1, 1});
    ToughnessResult r = toughness_exact(g);
    CHECK(r.tau == Rational(2, 3));
    CHECK(r.witness.to_vector() == std::vector<int>{0, 1});  // the join clique
    CHECK(r.components == 3);
    CHECK(components_after_removal(g, r.witness).count == r.components);
}

TEST_CASE("pruned and unpruned enumeration agree") {
    Graph g = split_graph(2, {12, 1, 1});
    ToughnessResult pruned = toughness_exact(g, {.limit = 24, .prune = true});
    ToughnessResult full = toughness_exact(g, {.limit = 24, .prune = false});
    CHECK(pruned.tau == full.tau);
    CHECK(pruned.witness == full.witness);
    CHECK(pruned.components == full.components);
}

TEST_CASE("tight family values") {
    CHECK(toughness_exact(split_graph(1, {12, 1})).tau == Rational(1, 2));
    CHECK(toughness_exact(split_graph(1, {10, 1, 1, 1})).tau == Rational(1, 4));
}

TEST_CASE("cycles are 1-tough") {
    ToughnessResult r = toughness_exact(cycle(6));
    CHECK(r.tau == Rational(1));
    // deterministic witness: first cut in (cardinality, mask) order
    CHECK(r.witness.to_vector() == std::vector<int>{0, 2});
    CHECK(r.components == 2);
}

TEST_CASE("complete bipartite toughness is p/q") {
    for (int p = 1; p <= 5; ++p) {
        for (int q = p; q <= 5; ++q) {
            if (p == 1 && q == 1) continue;  // K_2 is complete
            CAPTURE(p);
            CAPTURE(q);
            CHECK(toughness_exact(complete_bipartite(p, q)).tau == Rational(p, q));
        }
    }
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(toughness_exact(Graph::complete(5)), ToughnessUndefinedError);
    CHECK_THROWS_AS(toughness_exact(disjoint_union(Graph::complete(2), Graph::complete(2))),
                    NotConnectedError);
    Graph big = cycle(30);
    CHECK_THROWS_WITH_AS(toughness_exact(big), doctest::Contains("is_t_tough"), SizeLimitError);
    // raising the limit admits larger graphs (a star prunes immediately)
    Graph star30 = complete_bipartite(1, 29);
    CHECK(toughness_exact(star30, {.limit = 30}).tau == Rational(1, 29));
    CHECK_THROWS_AS(toughness_exact(big, {.limit = 63}), SizeLimitError);
    CHECK_THROWS_AS(is_t_tough(cycle(30), Rational(1)), SizeLimitError);
    CHECK_THROWS_AS(is_t_tough(cycle(6), Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(is_t_tough(cycle(6), Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("complete graphs are vacuously t-tough") {
    for (int n : {2, 5, 10}) {
        auto ans = is_t_tough(Graph::complete(n), Rational(1000));
        CHECK(ans.tough);
        CHECK_FALSE(ans.witness.has_value());
    }
    // even above the enumeration guard: completeness needs no enumeration
    CHECK(is_t_tough(Graph::complete(40), Rational(3)).tough);
}

TEST_CASE("violating cut sets are returned") {
    Graph g = split_graph(2, {12, 1, 1});
    auto ans = is_t_tough(g, Rational(1));
    CHECK_FALSE(ans.tough);
    REQUIRE(ans.witness.has_value());
    CHECK(ans.witness->count() == 2);
    auto split = components_after_removal(g, *ans.witness);
    CHECK(Rational(ans.witness->count()) < Rational(1) * Rational(split.count));

    Graph frac = split_graph(1, {10, 1, 1, 1});
    auto frac_ans = is_t_tough(frac, Rational(1, 3));
    CHECK_FALSE(frac_ans.tough);
    REQUIRE(frac_ans.witness.has_value());
    CHECK(frac_ans.witness->to_vector() == std::vector<int>{0});  // 1/4 < 1/3
}

TEST_CASE("toughness result is consistent with the t-tough test") {
    SplitMix64 rng(31337);
    int checked = 0;
    while (checked < 12) {
        int n = 5 + static_cast<int>(rng.next() % 5);
        Graph g = sample_connected({n, 1, rng.next(), 1}).front();
        if (is_complete(g)) continue;
        ++checked;
        ToughnessResult r = toughness_exact(g);
        CHECK(is_t_tough(g, r.tau).tough);
        Rational bumped = r.tau + Rational(1, static_cast<long long>(n) * n);
        CHECK_FALSE(is_t_tough(g, bumped).tough);
        CHECK(components_after_removal(g, r.witness).count == r.components);
        CHECK(Rational(r.witness.count(), r.components) == r.tau);
    }
}

TEST_CASE("adding edges cannot decrease toughness (exhaustive through n=6)") {
    for (int n = 4; n <= 6; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask + 1 < (1ull << pairs); ++mask) {
            Graph g = from_mask(n, mask);
            if (!is_connected(g)) continue;
            Rational tau = toughness_exact(g, {.limit = n}).tau;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (g.adjacent(u, v)) continue;
                    Graph h = add_edge(g, u, v);
                    if (is_complete(h)) continue;  // toughness undefined there
                    CHECK(toughness_exact(h, {.limit = n}).tau >= tau);
                }
            }
        }
    }
}

TEST_CASE("adding edges cannot decrease toughness (sampled at n=7,8)") {
    SplitMix64 rng(808);
    for (int n : {7, 8}) {
        for (int trial = 0; trial < 15; ++trial) {
            Graph g = sample_connected({n, 1, rng.next(), 1}).front();
            if (is_complete(g)) continue;
            Rational tau = toughness_exact(g, {.limit = n}).tau;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (g.adjacent(u, v)) continue;
                    Graph h = add_edge(g, u, v);
                    if (is_complete(h)) continue;
                    CHECK(toughness_exact(h, {.limit = n}).tau >= tau);
                }
            }
        }
    }
}

TEST_CASE("json serialization") {
    Graph g = split_graph(2, {12, 1, 1});
    ToughnessResult r = toughness_exact(g);
    CHECK(r.to_json() == R"({"tau":"2/3","witness":[0,1],"components":3})");
}
