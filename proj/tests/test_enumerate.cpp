#include <cstdlib>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "specturan/enumerate.hpp"

using namespace specturan;

namespace {

Hypergraph shuffled(const Hypergraph& h, std::mt19937& rng) {
    std::vector<int> perm(h.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<int>> edges;
    for (const auto& e : h.edges) {
        std::vector<int> m;
        for (int v : e) m.push_back(perm[v]);
        edges.push_back(m);
    }
    return build(h.n, h.r, edges);
}

}  // namespace

TEST_CASE("canonical labels are isomorphism invariants") {
    std::mt19937 rng(31);
    std::vector<Hypergraph> samples{
        cycle_graph(5),           complete_graph(6, 2),       c5_blowup(8),
        turan_graph(7, 3, 2),     complete_graph(5, 3),       build(6, 2, {}),
        build(6, 3, {{0, 1, 2}, {1, 2, 3}, {3, 4, 5}}),
    };
    for (const auto& h : samples) {
        CanonicalLabel base = canonical_form(h);
        for (int trial = 0; trial < 8; ++trial)
            CHECK(canonical_form(shuffled(h, rng)) == base);
        CHECK(canonical_form(canonical_copy(h)) == base);
        CHECK(graph_from_label(base) == canonical_copy(h));
    }
}

TEST_CASE("canonical labels separate non-isomorphic graphs") {
    Hypergraph star = build(4, 2, {{0, 1}, {0, 2}, {0, 3}});
    Hypergraph tri_iso = build(4, 2, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(canonical_form(star) != canonical_form(tri_iso));

    Hypergraph e2 = build(2, 2, {});
    Hypergraph k2 = build(2, 2, {{0, 1}});
    CHECK(canonical_form(e2) != canonical_form(k2));
}

TEST_CASE("orderly generation counts for 2-graphs") {
    const std::size_t expected[] = {1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n)
        CHECK(enumerate_graphs(n, 2).size() == expected[n - 1]);
}

TEST_CASE("orderly generation equals the brute-force pipeline") {
    for (int n = 1; n <= 6; ++n) {
        std::set<CanonicalLabel> expected = oracle::brute_force_classes(n, 2);
        std::set<CanonicalLabel> got;
        for (const auto& g : enumerate_graphs(n, 2)) CHECK(got.insert(canonical_form(g)).second);
        CHECK(got == expected);
    }
    for (int n = 3; n <= 5; ++n) {
        std::set<CanonicalLabel> expected = oracle::brute_force_classes(n, 3);
        std::set<CanonicalLabel> got;
        for (const auto& g : enumerate_graphs(n, 3)) CHECK(got.insert(canonical_form(g)).second);
        CHECK(got == expected);
    }
}

TEST_CASE("predicate filtering") {
    FamilySpec k3 = make_family({complete_graph(3, 2)});
    EnumerationOptions tf;
    tf.predicate = [&](const Hypergraph& h) { return is_free(h, k3); };
    tf.hereditary = true;
    CHECK(enumerate_graphs(4, 2, tf).size() == 7);

    // classic triangle-free class counts
    const std::size_t tf_counts[] = {1, 2, 3, 7, 14, 38, 107, 410};
    for (int n = 1; n <= 8; ++n) CHECK(enumerate_graphs(n, 2, tf).size() == tf_counts[n - 1]);

    // non-hereditary predicate: graphs on 5 vertices containing a C5
    Hypergraph c5 = cycle_graph(5);
    EnumerationOptions has_c5;
    has_c5.predicate = [&](const Hypergraph& h) { return has_embedding(c5, h); };
    std::vector<Hypergraph> with = enumerate_graphs(5, 2, has_c5);

    EnumerationOptions no_c5;
    no_c5.predicate = [&](const Hypergraph& h) { return !has_embedding(c5, h); };
    std::vector<Hypergraph> without = enumerate_graphs(5, 2, no_c5);
    CHECK(with.size() + without.size() == 34);

    std::set<CanonicalLabel> expected;
    for (const auto& label : oracle::brute_force_classes(5, 2)) {
        if (has_embedding(c5, graph_from_label(label))) expected.insert(label);
    }
    std::set<CanonicalLabel> got;
    for (const auto& g : with) got.insert(canonical_form(g));
    CHECK(got == expected);
}

TEST_CASE("stream checkpoints reproduce the remaining sequence") {
    EnumerationOptions opts;
    std::vector<CanonicalLabel> full;
    std::vector<std::string> tokens;
    {
        EnumerationStream stream(5, 2, opts);
        CHECK(stream.checkpoint().empty());
        while (auto g = stream.next()) {
            full.push_back(canonical_form(*g));
            tokens.push_back(stream.checkpoint());
        }
    }
    CHECK(full.size() == 34);

    for (std::size_t cut = 0; cut < full.size(); ++cut) {
        EnumerationStream resumed(5, 2, opts, tokens[cut]);
        std::vector<CanonicalLabel> rest;
        while (auto g = resumed.next()) rest.push_back(canonical_form(*g));
        CHECK(rest == std::vector<CanonicalLabel>(full.begin() + cut + 1, full.end()));
    }
}

TEST_CASE("enumeration ceilings") {
    CHECK_THROWS_AS(enumerate_graphs(11, 2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_graphs(8, 3), std::invalid_argument);

    EnumerationOptions raise;
    raise.ceiling_override = 11;
    EnumerationStream stream(11, 2, raise);  // allowed, not drained
    CHECK(stream.checkpoint().empty());

    setenv("SPECTURAN_CEILING", "4", 1);
    CHECK(enumeration_ceiling(2) == 4);
    CHECK_THROWS_AS(enumerate_graphs(5, 2), std::invalid_argument);
    unsetenv("SPECTURAN_CEILING");
    CHECK(enumeration_ceiling(2) == 10);
}
