#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "hypertile/errors.hpp"
#include "hypertile/hypergraph.hpp"
#include "hypertile/regularity.hpp"
#include "hypertile/rng.hpp"

using namespace hypertile;

TEST_CASE("hypergraph construction canonicalizes and validates") {
    Hypergraph3 h(5, {{2, 1, 0}, {0, 1, 2}, {1, 2, 3}});
    CHECK(h.edge_count() == 2);  // duplicate collapsed
    CHECK(h.has_edge(2, 0, 1));
    CHECK_FALSE(h.has_edge(0, 1, 4));
    CHECK_THROWS_AS(Hypergraph3(3, {{0, 1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph3(3, {{0, 1, 1}}), std::invalid_argument);
}

TEST_CASE("degree on 1-sets and 2-sets") {
    auto h = Hypergraph3::complete(4);
    std::array<int, 1> v0{0};
    CHECK(h.degree(v0) == 3);  // C(3,2) edges through a vertex
    std::array<int, 2> pair{0, 1};
    CHECK(h.degree(pair) == 2);
    Hypergraph3 empty(4, {});
    CHECK(empty.degree(v0) == 0);

    std::array<int, 2> bad{0, 0};
    CHECK_THROWS_AS(h.degree(bad), std::invalid_argument);
    std::array<int, 1> oor{9};
    CHECK_THROWS_AS(h.degree(oor), std::invalid_argument);
}

TEST_CASE("degree sum identity: sum of vertex degrees = 3|E|") {
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        int n = 4 + static_cast<int>(rng.below(6));
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    if (rng.bernoulli(1, 3)) edges.push_back({i, j, k});
        Hypergraph3 h(n, edges);
        long long total = 0;
        for (int v = 0; v < n; ++v) total += h.degree1(v);
        CHECK(total == 3 * h.edge_count());
    }
}

TEST_CASE("shadow") {
    Hypergraph3 single(3, {{0, 1, 2}});
    auto sh = single.shadow();
    REQUIRE(sh.size() == 3);
    CHECK(sh[0] == std::pair<int, int>{0, 1});
    CHECK(sh[2] == std::pair<int, int>{1, 2});

    CHECK(Hypergraph3(4, {}).shadow().empty());
    CHECK(Hypergraph3::complete(6).shadow().size() == 15);
}

TEST_CASE("shadow monotone under edge addition") {
    Rng rng(11);
    for (int t = 0; t < 10; ++t) {
        int n = 6;
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    if (rng.bernoulli(1, 4)) edges.push_back({i, j, k});
        Hypergraph3 h(n, edges);
        auto before = h.shadow();
        // add one absent edge if any
        for (int i = 0; i < n && edges.size() < 20; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    if (!h.has_edge(i, j, k)) {
                        edges.push_back({i, j, k});
                        goto added;
                    }
    added:
        Hypergraph3 h2(n, edges);
        auto after = h2.shadow();
        for (auto& p : before) CHECK(std::binary_search(after.begin(), after.end(), p));
        CHECK(after.size() <= static_cast<std::size_t>(binom(n, 2)));
    }
}

TEST_CASE("shadow_bound values and identity") {
    bool in_range = false;
    // g(d0) + d0 = 1 at d0 = 6-4*sqrt(2)
    const double d0 = 6.0 - 4.0 * std::sqrt(2.0);
    CHECK(std::abs(shadow_bound(d0, &in_range) + d0 - 1.0) < 1e-12);
    CHECK(in_range);
    CHECK(shadow_bound(1.0, &in_range) == doctest::Approx(1.0));
    CHECK_FALSE(in_range);  // 1.0 beyond (47-5*sqrt(57))/24
    CHECK(shadow_bound(0.25) == doctest::Approx(0.5));
    CHECK_THROWS_AS(shadow_bound(-0.1), std::invalid_argument);
}

TEST_CASE("shadow_bound strictly increasing on [1/4, 0.385]") {
    double prev = shadow_bound(0.25);
    for (int i = 1; i <= 1000; ++i) {
        double d = 0.25 + (0.385 - 0.25) * i / 1000.0;
        double g = shadow_bound(d);
        CHECK(g > prev);
        prev = g;
    }
}

TEST_CASE("tripartite density") {
    auto h = Hypergraph3::complete_tripartite(2, 2, 2);
    std::vector<int> v1{0, 1}, v2{2, 3}, v3{4, 5};
    CHECK(tripartite_density(h, v1, v2, v3) == Rational(1));

    Hypergraph3 empty(6, {});
    CHECK(tripartite_density(empty, v1, v2, v3) == Rational(0));

    Hypergraph3 single(4, {{0, 1, 2}});
    std::vector<int> a{0}, b{1}, c{2, 3};
    CHECK(tripartite_density(single, a, b, c) == Rational(1, 2));

    std::vector<int> overlap{0, 2};
    CHECK_THROWS_AS(tripartite_density(single, a, overlap, c), std::invalid_argument);
}

TEST_CASE("is_regular on complete / edgeless / single-edge triples") {
    auto h = Hypergraph3::complete_tripartite(3, 3, 3);
    std::vector<int> v1{0, 1, 2}, v2{3, 4, 5}, v3{6, 7, 8};
    CHECK(is_regular(h, v1, v2, v3, Rational(1, 4), Rational(1)));

    Hypergraph3 empty(9, {});
    CHECK(is_regular(empty, v1, v2, v3, Rational(1, 4), Rational(0)));

    // one edge, |Vi|=3: the singleton triple of the edge has density 1
    Hypergraph3 single(9, {{0, 3, 6}});
    CHECK_FALSE(is_regular(single, v1, v2, v3, Rational(1, 4), Rational(1, 27)));
}

TEST_CASE("is_regular monotone in eps") {
    Rng rng(23);
    std::vector<Edge> edges;
    for (int x = 0; x < 3; ++x)
        for (int y = 3; y < 6; ++y)
            for (int z = 6; z < 9; ++z)
                if (rng.bernoulli(2, 3)) edges.push_back({x, y, z});
    Hypergraph3 h(9, edges);
    std::vector<int> v1{0, 1, 2}, v2{3, 4, 5}, v3{6, 7, 8};
    Rational d = tripartite_density(h, v1, v2, v3);
    for (auto [num, den] : {std::pair{1, 8}, {1, 4}, {1, 2}, {3, 4}}) {
        if (is_regular(h, v1, v2, v3, Rational(num, den), d)) {
            // once regular, stays regular at larger eps
            CHECK(is_regular(h, v1, v2, v3, Rational(num, den) + Rational(1, 8), d));
        }
    }
}

TEST_CASE("is_regular guard") {
    auto h = Hypergraph3::complete_tripartite(15, 2, 2);
    std::vector<int> v1, v2{15, 16}, v3{17, 18};
    for (int i = 0; i < 15; ++i) v1.push_back(i);
    CHECK_THROWS_AS(is_regular(h, v1, v2, v3, Rational(1, 4), Rational(1)), SizeLimitError);
}

TEST_CASE("cluster hypergraph") {
    // complete host, 3 equal parts
    auto h = Hypergraph3::complete(9);
    VertexPartition p(9, {{}, {0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
    auto r = cluster_hypergraph(h, p, Rational(1, 4), Rational(1, 2));
    CHECK(r.n() == 3);
    CHECK(r.edge_count() == 1);

    Hypergraph3 empty(9, {});
    CHECK(cluster_hypergraph(empty, p, Rational(1, 4), Rational(1, 2)).edge_count() == 0);

    // complete tripartite viewed with its own parts: one dense regular triple
    auto ct = Hypergraph3::complete_tripartite(3, 3, 3);
    auto rc = cluster_hypergraph(ct, p, Rational(1, 4), Rational(1, 2));
    CHECK(rc.edge_count() == 1);

    VertexPartition uneven(9, {{}, {0, 1, 2, 3}, {4, 5}, {6, 7, 8}});
    CHECK_THROWS_AS(cluster_hypergraph(h, uneven, Rational(1, 4), Rational(1, 2)),
                    std::invalid_argument);
}

TEST_CASE("cluster hypergraph recovers disjoint complete tripartite blocks") {
    // two blocks on 6+6 vertices, cluster size 2
    std::vector<Edge> edges;
    auto add_block = [&](int base) {
        for (int x = base; x < base + 2; ++x)
            for (int y = base + 2; y < base + 4; ++y)
                for (int z = base + 4; z < base + 6; ++z) edges.push_back({x, y, z});
    };
    add_block(0);
    add_block(6);
    Hypergraph3 h(12, edges);
    VertexPartition p(12, {{},
                           {0, 1}, {2, 3}, {4, 5},
                           {6, 7}, {8, 9}, {10, 11}});
    for (auto d : {Rational(1, 4), Rational(1, 2), Rational(1)}) {
        auto r = cluster_hypergraph(h, p, Rational(1, 4), d);
        REQUIRE(r.edge_count() == 2);
        CHECK(r.edges()[0] == Edge{0, 1, 2});
        CHECK(r.edges()[1] == Edge{3, 4, 5});
    }
}

TEST_CASE("vertex partition validation") {
    CHECK_THROWS_AS(VertexPartition(3, {{}, {0, 1}}), std::invalid_argument);  // 2 unassigned
    CHECK_THROWS_AS(VertexPartition(3, {{}, {0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(VertexPartition(3, {{0}, {1, 2}, {}}), std::invalid_argument);
    VertexPartition ok(4, {{3}, {0, 1}, {2}});
    CHECK(ok.r() == 2);
    CHECK(ok.part_of(3) == 0);
    CHECK(ok.part_of(1) == 1);
}
