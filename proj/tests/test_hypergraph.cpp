#include <random>

#include "doctest.h"
#include "specturan/hypergraph.hpp"

using namespace specturan;

TEST_CASE("build canonicalizes and validates") {
    Hypergraph k3 = build(3, 2, {{1, 0}, {1, 2}, {0, 2}});
    CHECK(k3.n == 3);
    CHECK(k3.edges == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});

    // duplicate edges collapse silently
    Hypergraph dup = build(4, 3, {{0, 1, 2}, {0, 2, 1}});
    CHECK(dup.edges.size() == 1);
    CHECK(dup.edges[0] == std::vector<int>{0, 1, 2});

    Hypergraph c5 = build(5, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(c5.edges.size() == 5);
    CHECK(c5 == cycle_graph(5));

    CHECK_THROWS_AS(build(3, 2, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(build(3, 2, {{0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(build(3, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(build(3, 2, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("named generators") {
    CHECK(complete_graph(4, 3).edges.size() == 4);
    CHECK(complete_graph(5, 2).edges.size() == 10);

    Hypergraph c4 = turan_graph(4, 2, 2);
    CHECK(c4.edges.size() == 4);  // K_{2,2}

    CHECK(turan_graph(10, 5, 5).edges.size() == 32);

    CHECK(balanced_sizes(7, 5) == std::vector<int>{2, 2, 1, 1, 1});

    CHECK_THROWS_AS(turan_graph(6, 2, 3), std::invalid_argument);  // l < r
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);

    Hypergraph l10 = c5_blowup(10);
    CHECK(l10.n == 10);
    CHECK(l10.edges.size() == 20);

    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::Cycle;
    spec.n = 6;
    CHECK(generate(spec) == cycle_graph(6));
}

TEST_CASE("induced and delete_vertex") {
    Hypergraph k4 = complete_graph(4, 2);
    std::vector<int> tri{0, 1, 2};
    CHECK(induced(k4, tri) == complete_graph(3, 2));

    Hypergraph c5 = cycle_graph(5);
    Hypergraph arc = induced(c5, tri);
    CHECK(arc.edges == std::vector<std::vector<int>>{{0, 1}, {1, 2}});

    std::vector<int> pair{0, 1};
    Hypergraph below = induced(complete_graph(5, 3), pair);
    CHECK(below.n == 2);
    CHECK(below.edges.empty());

    Hypergraph path = delete_vertex(c5, 0);
    CHECK(path.n == 4);
    CHECK(path.edges.size() == 3);
    CHECK(delete_vertex(k4, 3) == complete_graph(3, 2));

    Hypergraph single = build(3, 3, {{0, 1, 2}});
    Hypergraph isolated = delete_vertex(single, 2);
    CHECK(isolated.n == 2);
    CHECK(isolated.edges.empty());

    CHECK_THROWS_AS(delete_vertex(c5, 9), std::invalid_argument);

    // induced on the full vertex set is the identity
    std::vector<int> all{0, 1, 2, 3, 4};
    CHECK(induced(c5, all) == c5);
}

TEST_CASE("blow_up") {
    Hypergraph c5 = cycle_graph(5);
    Hypergraph l10 = blow_up({c5, {2, 2, 2, 2, 2}});
    CHECK(l10.n == 10);
    CHECK(l10.edges.size() == 20);
    CHECK(l10 == c5_blowup(10));

    // all-ones blow-up is edge-for-edge identical under the contiguous labels
    CHECK(blow_up({c5, {1, 1, 1, 1, 1}}) == c5);
    Hypergraph k4r3 = complete_graph(4, 3);
    CHECK(blow_up({k4r3, {1, 1, 1, 1}}) == k4r3);

    Hypergraph edge = build(2, 2, {{0, 1}});
    Hypergraph k23 = blow_up({edge, {2, 3}});
    CHECK(k23.n == 5);
    CHECK(k23.edges.size() == 6);

    CHECK_THROWS_AS(blow_up({c5, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(blow_up({c5, {1, 1, 1, 1, 0}}), std::invalid_argument);
}

TEST_CASE("shadow2 and expansion") {
    CHECK(shadow2(complete_graph(4, 3)) == complete_graph(4, 2));

    Hypergraph one3 = build(4, 3, {{0, 1, 2}});
    Hypergraph sh = shadow2(one3);
    CHECK(sh.n == 4);
    CHECK(sh.edges.size() == 3);

    Hypergraph c6 = cycle_graph(6);
    CHECK(shadow2(c6) == c6);
    CHECK(shadow2(blow_up({cycle_graph(5), {1, 1, 1, 1, 1}})) == cycle_graph(5));

    Hypergraph ek3 = expansion(complete_graph(3, 2), 3);
    CHECK(ek3.n == 6);
    CHECK(ek3.r == 3);
    CHECK(ek3.edges.size() == 3);

    CHECK(expansion(c6, 2) == c6);

    Hypergraph e1 = expansion(build(2, 2, {{0, 1}}), 4);
    CHECK(e1.n == 4);
    CHECK(e1.edges.size() == 1);

    CHECK_THROWS_AS(expansion(c6, 1), std::invalid_argument);
    CHECK_THROWS_AS(expansion(complete_graph(4, 3), 3), std::invalid_argument);
}

namespace {

// transversal oracle: subsets with pairwise-distinct parts
std::size_t count_transversals(int n, int l, int r) {
    std::vector<int> part(n, 0);
    std::vector<int> sizes = balanced_sizes(n, l);
    int v = 0;
    for (int i = 0; i < l; ++i)
        for (int k = 0; k < sizes[i]; ++k) part[v++] = i;

    std::size_t total = 0;
    std::vector<int> idx(r);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == r) {
            std::vector<int> ps;
            for (int i = 0; i < r; ++i) ps.push_back(part[idx[i]]);
            std::sort(ps.begin(), ps.end());
            if (std::adjacent_find(ps.begin(), ps.end()) == ps.end()) ++total;
            return;
        }
        for (int u = start; u < n; ++u) {
            idx[depth] = u;
            rec(u + 1, depth + 1);
        }
    };
    rec(0, 0);
    return total;
}

}  // namespace

TEST_CASE("Turan edge counts match transversal counting") {
    for (int l = 2; l <= 5; ++l)
        for (int r = 2; r <= l; ++r)
            for (int n = 1; n <= 12; ++n)
                CHECK(turan_graph(n, l, r).edges.size() == count_transversals(n, l, r));
}

TEST_CASE("HGR round trip") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        int r = 2 + static_cast<int>(rng() % 2);
        std::vector<std::vector<int>> edges;
        if (r <= n) {
            for (int tries = 0; tries < 12; ++tries) {
                std::vector<int> e;
                while (static_cast<int>(e.size()) < r) {
                    int v = static_cast<int>(rng() % n);
                    if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
                }
                edges.push_back(e);
            }
        }
        Hypergraph h = build(n, r, edges);
        CHECK(from_hgr(to_hgr(h)) == h);
    }

    Hypergraph commented = from_hgr("# a comment\n3 2\n0 1\n\n# another\n1 2\n");
    CHECK(commented.edges.size() == 2);
    CHECK_THROWS_AS(from_hgr(""), std::invalid_argument);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("120/3125").value() == doctest::Approx(0.0384));
    CHECK(parse_rational("0.5").num == 5);
    CHECK(parse_rational("0.5").den == 10);
    CHECK(parse_rational("3").value() == 3.0);
    CHECK_THROWS(parse_rational("-1/2"));
}
